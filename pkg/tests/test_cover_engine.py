#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Tests for fibercover.cover_engine"""

import random

import pytest
from sympy.combinatorics import Permutation

from fibercover.exceptions import DisconnectedCoverError, SlopeError
from fibercover.word_algebra import TwistWord, TwistGen, TwistEndo, parse_twist_word, twist_endo, boundary_conjugator, BOUNDARY_WORD
from fibercover.slope_calculus import Slope
from fibercover.cover_engine import (
    CutData,
    CoverRep,
    Intertwiner,
    check_condition_I_II,
    check_condition_III,
    build_rep,
    restrict_to_orbit,
    euler_and_boundary,
    find_intertwiners,
    is_intertwiner,
    deck_group,
    canonical_intertwiner,
    surgery_lifts,
    boundary_tori,
  )

def cyc(d, *cycle):
    return Permutation([list(cycle)], size=d)

def ident(d):
    return Permutation(list(range(d)))

def case1_template(a, b):
    return CutData([a, ~a, b, ~b])

def test_case1_template_conditions_I_II():
    a = cyc(4, 0, 1, 2)
    b = cyc(4, 1, 3)
    assert check_condition_I_II(case1_template(a, b)) == (True, True)

def test_trivial_conditions():
    c = CutData([ident(3)] * 5)
    assert check_condition_I_II(c) == (True, True)
    for s in (Slope(1, 0), Slope(3, -7), Slope(0, 1)):
        assert check_condition_III(c, 4, s)

def test_condition_II_fails_for_three_cycle_product():
    c = CutData([cyc(3, 0, 1), cyc(3, 0, 2)])
    assert check_condition_I_II(c)[1] is False

def test_condition_III_fails_when_order_does_not_divide():
    # the first relation is sigma_1^(R mu - 2 lambda); here R mu - 2 lambda = 1
    c = case1_template(cyc(3, 0, 1, 2), ident(3))
    assert not check_condition_III(c, 1, Slope(1, 0))

def test_trivial_cut_data_is_cyclic_cover():
    rep = build_rep(CutData([ident(1)] * 4))
    assert rep.degree == 4
    assert rep.px == [0, 1, 2, 3]
    assert rep.py == [1, 2, 3, 0]

def test_degree_six_transitive():
    rep = build_rep(CutData([cyc(3, 0, 1, 2), cyc(3, 0, 2, 1)]))
    assert rep.degree == 6
    assert len(rep.orbits()) == 1

def test_disconnected_rejected_and_restricted():
    c = CutData([cyc(4, 0, 1), cyc(4, 0, 1)])
    with pytest.raises(DisconnectedCoverError) as info:
        build_rep(c)
    orbits = info.value.orbits
    assert len(orbits) == 3
    rep = restrict_to_orbit(c, orbits[0])
    assert rep.degree == 4

def test_euler_and_boundary_degree_one():
    rep = build_rep(CutData([ident(1)]))
    assert euler_and_boundary(rep) == (-1, 1)

def test_euler_and_boundary_abelian_cover():
    c2 = cyc(2, 0, 1)
    rep = build_rep(CutData([c2, c2]))
    assert euler_and_boundary(rep) == (-4, 4)

def test_deck_group_of_regular_cover():
    c2 = cyc(2, 0, 1)
    rep = build_rep(CutData([c2, c2]))
    deck = deck_group(rep)
    assert len(deck) == rep.degree
    assert deck == sorted(deck)

@pytest.mark.parametrize("n", [2, 3])
def test_characteristic_cover_lifts_everything(n):
    c = cyc(n, *range(n))
    rep = build_rep(CutData([c] * n))
    h = parse_twist_word("Dx Dy")
    taus = find_intertwiners(rep, h)
    assert len(taus) > 0
    assert all(is_intertwiner(rep, h, tau) for tau in taus)
    assert find_intertwiners(rep, twist_endo(h)) == taus

def test_mismatched_cycle_type_has_no_lift():
    rep = build_rep(CutData([cyc(2, 0, 1), ident(2)]))
    dy = TwistEndo.twist_power(TwistGen.Y, 1)
    assert find_intertwiners(rep, dy) == []

def test_degree_one_surgery_and_tori():
    rep = build_rep(CutData([ident(1)]))
    tau = Intertwiner([0])
    for s in (Slope(1, 0), Slope(5, 4), Slope(-2, 3), Slope(0, 1)):
        assert surgery_lifts(rep, tau, None, s)
    assert boundary_tori(rep, tau) == 1

def test_abelian_cover_boundary_tori_identity_monodromy():
    c2 = cyc(2, 0, 1)
    rep = build_rep(CutData([c2, c2]))
    assert boundary_tori(rep, Intertwiner(list(range(4)))) == 4

def test_surgery_slope_perturbation_breaks_lift():
    a = cyc(3, 0, 1, 2)
    rep = build_rep(case1_template(a, ident(3)))
    word = parse_twist_word("Dx^3 Dy^4")
    tau = canonical_intertwiner(rep, word)
    assert tau is not None
    # R mu = 3, 2 lambda = 0 mod 3 and a^lambda = 1
    assert surgery_lifts(rep, tau, None, Slope(1, 3))
    assert not surgery_lifts(rep, tau, None, Slope(1, 4))

def test_boundary_conjugator_matches_endo():
    for text in ("Dx Dy", "Dy^2 Dx^-1 Dy", "Dx^2 Dy^-4 Dx Dy^-4 Dx"):
        word = parse_twist_word(text)
        w = boundary_conjugator(word)
        assert twist_endo(word).apply(BOUNDARY_WORD) == w * BOUNDARY_WORD * w.inverse()

def test_boundary_conjugator_array_matches_word():
    a = cyc(3, 0, 1, 2)
    b = cyc(3, 0, 1)
    rep = build_rep(case1_template(a, b))
    word = parse_twist_word("Dx Dy^-1 Dx^2 Dy^3")
    assert rep.boundary_conjugator_array(word) == rep.word_array(boundary_conjugator(word))

def random_perm(rng, d):
    arr = list(range(d))
    rng.shuffle(arr)
    return Permutation(arr)

def random_cut_data_I_II(rng):
    """Random cut data satisfying conditions I and II, built from inverse pairs and
       runs of powers of one permutation with exponents summing to 0 mod its order."""
    n = rng.randint(1, 6)
    d = rng.randint(1, 8)
    sigma = []
    while len(sigma) < n:
        remaining = n - len(sigma)
        if remaining >= 2 and rng.random() < 0.5:
            a = random_perm(rng, d)
            sigma.extend([a, ~a])
        else:
            length = rng.randint(1, remaining)
            g = random_perm(rng, d)
            order = g.order()
            exponents = [rng.randint(0, order - 1) for _ in range(length - 1)]
            exponents.append(-sum(exponents) % order)
            sigma.extend(g ** e for e in exponents)
    return CutData(sigma, d=d)

def random_word(rng, n):
    blocks = []
    for _ in range(rng.randint(1, 3)):
        blocks.append((TwistGen.X, rng.choice([-3, -2, -1, 1, 2, 3])))
        blocks.append((TwistGen.Y, n * rng.choice([-2, -1, 1, 2])))
    return TwistWord(blocks)

def connected_samples(seed, count):
    rng = random.Random(seed)
    samples = []
    while len(samples) < count:
        c = random_cut_data_I_II(rng)
        assert check_condition_I_II(c) == (True, True)
        try:
            rep = build_rep(c)
        except DisconnectedCoverError:
            continue
        samples.append((rng, c, rep))
    return samples

def test_conditions_I_II_imply_lift():
    for rng, c, rep in connected_samples(1234, 200):
        word = random_word(rng, c.n)
        taus = find_intertwiners(rep, word)
        assert len(taus) > 0, f"{c} {word}"
        assert len(taus) == len(deck_group(rep))
        tau = canonical_intertwiner(rep, word)
        assert tau is not None
        assert tau in taus

def test_condition_III_matches_surgery_lift():
    rng = random.Random(99)
    checked = 0
    while checked < 200:
        d = rng.randint(2, 6)
        c = case1_template(random_perm(rng, d), random_perm(rng, d))
        try:
            rep = build_rep(c)
        except DisconnectedCoverError:
            continue
        word = random_word(rng, c.n)
        R = sum(word.exponents(TwistGen.X))
        tau = canonical_intertwiner(rep, word)
        assert tau is not None
        mu = rng.randint(-12, 12)
        lam = rng.randint(-12, 12)
        try:
            s = Slope(mu, lam)
        except SlopeError:
            continue
        expected = check_condition_III(c, R, s)
        assert surgery_lifts(rep, tau, None, s) == expected
        assert surgery_lifts(rep, tau, None, s, monodromy=word) == expected
        checked += 1

def test_intertwiner_jsonable():
    tau = Intertwiner([2, 0, 1])
    assert tau.to_jsonable() == [3, 1, 2]
    assert Intertwiner.from_jsonable([3, 1, 2]) == tau

def test_cover_rep_jsonable():
    rep = build_rep(CutData([cyc(3, 0, 1, 2), cyc(3, 0, 2, 1)]))
    again = CoverRep.from_jsonable(rep.to_jsonable())
    assert again.px == rep.px
    assert again.py == rep.py
    assert again.cut_data == rep.cut_data
