#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Tests for fibercover.homology_engine"""

import random
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.combinatorics import Permutation

from fibercover.exceptions import PreconditionError, DisconnectedCoverError, RelatorActionError
from fibercover.word_algebra import FreeWord, TwistWord, TwistGen, TwistEndo, parse_twist_word, monodromy_matrix
from fibercover.slope_calculus import Slope
from fibercover.cover_engine import CutData, Intertwiner, build_rep, canonical_intertwiner, surgery_lifts
from fibercover.homology_engine import (
    IntMatrix,
    smith_normal_form,
    GroupPresentation,
    mapping_torus_presentation,
    CosetAction,
    reidemeister_schreier,
    mapping_torus_cover_homology,
    induced_fiber_action,
    boundary_classes,
    fixed_and_peripheral,
    wang_b1,
    b1_filled_cover,
    HomologyCertificate,
    low_index_subgroups,
  )

H = parse_twist_word("Dx Dy")

def degree_one():
    return build_rep(CutData([Permutation([0])])), Intertwiner([0])

def test_snf_diag_2_3():
    snf = smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    assert snf.diagonal == [1, 6]
    assert snf.rank == 2

def test_snf_zero_matrix():
    snf = smith_normal_form(IntMatrix([[0, 0, 0], [0, 0, 0]]))
    assert snf.diagonal == [0, 0]
    assert snf.rank == 0

def test_snf_rank_one():
    snf = smith_normal_form(IntMatrix([[1, 0], [0, 0]]))
    assert snf.diagonal == [1, 0]
    assert snf.rank == 1

def test_snf_witnesses_are_unimodular():
    m = IntMatrix([[4, 6, 2], [2, 8, 10], [6, 0, -4]])
    snf = smith_normal_form(m, with_transforms=True)
    assert snf.left is not None and snf.right is not None
    assert snf.left @ m @ snf.right == snf.diagonal_matrix()
    assert abs(Matrix(snf.left.entries).det()) == 1
    assert abs(Matrix(snf.right.entries).det()) == 1

def gcd_of_minors(rows, r):
    m = Matrix(rows)
    g = 0
    for ri in combinations(range(m.rows), r):
        for ci in combinations(range(m.cols), r):
            g = gcd(g, int(m.extract(list(ri), list(ci)).det()))
    return g

small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda nrows: st.integers(min_value=1, max_value=4).flatmap(
        lambda ncols: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6), min_size=ncols, max_size=ncols),
            min_size=nrows, max_size=nrows,
          )
      )
  )

@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_snf_matches_minor_oracle(rows):
    m = IntMatrix(rows)
    snf = smith_normal_form(m)
    dense = smith_normal_form(m, with_transforms=True)
    assert snf.diagonal == dense.diagonal
    assert snf.rank == Matrix(rows).rank()
    nonzero = [v for v in snf.diagonal if v != 0]
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    product = 1
    for r, d in enumerate(nonzero, start=1):
        product *= d
        assert product == gcd_of_minors(rows, r)

def test_snf_small_entries_sampled():
    rng = random.Random(1009)
    for _ in range(1000):
        nrows, ncols = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)]
        m = IntMatrix(rows)
        snf = smith_normal_form(m, with_transforms=True)
        assert snf.left @ m @ snf.right == snf.diagonal_matrix()
        nonzero = [v for v in snf.diagonal if v != 0]
        assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
        product = 1
        for r, d in enumerate(nonzero, start=1):
            product *= d
            assert product == gcd_of_minors(rows, r)

def test_rs_index_two_free_group():
    f2 = GroupPresentation.free(2)
    action = CosetAction([[1, 0], [0, 1]])
    sub = reidemeister_schreier(f2, action)
    assert sub.num_generators == 3
    assert sub.relators == []
    assert sub.abelianization() == (3, [])

def test_rs_generator_words_fix_basepoint():
    f2 = GroupPresentation.free(2)
    action = CosetAction([[1, 2, 0], [0, 2, 1]])
    sub = reidemeister_schreier(f2, action)
    for w in sub.generator_words():
        assert action.word_array(w)[0] == 0

def random_transitive_action(rng, degree, k=2):
    while True:
        images = []
        for _ in range(k):
            arr = list(range(degree))
            rng.shuffle(arr)
            images.append(arr)
        try:
            return CosetAction(images)
        except DisconnectedCoverError:
            continue

def test_nielsen_schreier_rank():
    rng = random.Random(7)
    f2 = GroupPresentation.free(2)
    for degree in range(1, 13):
        for _ in range(3):
            sub = reidemeister_schreier(f2, random_transitive_action(rng, degree))
            assert sub.num_generators == 1 + degree
            assert sub.abelianization() == (1 + degree, [])

def test_rs_rejects_nontrivial_relator():
    g = GroupPresentation(1, [FreeWord((1, 1))])
    with pytest.raises(RelatorActionError):
        reidemeister_schreier(g, CosetAction([[1, 2, 0]]))

def test_figure_eight_bundle_abelianization():
    assert mapping_torus_presentation(H).abelianization() == (1, [])

def test_figure_eight_filled_abelianizations():
    assert mapping_torus_presentation(H, Slope(1, 0)).abelianization() == (0, [])
    assert mapping_torus_presentation(H, Slope(0, 1)).abelianization() == (1, [])

def test_mapping_torus_rs_index_one():
    p = mapping_torus_presentation(H)
    rep, tau = degree_one()
    sub = reidemeister_schreier(p, CosetAction.from_cover(rep, tau))
    assert sub.abelianization() == (1, [])

def test_degree_one_filled_cover():
    rep, tau = degree_one()
    cert = b1_filled_cover(H, rep, tau, Slope(1, 1))
    assert cert.b1 == 0
    assert len(cert.torsion) <= 1
    assert cert.fix_rank == 0
    assert cert.witness is None
    assert cert.unfilled_b1 == 1

def test_degree_one_fiber_action_is_monodromy_matrix():
    rep, tau = degree_one()
    a = induced_fiber_action(rep, H, tau)
    m = monodromy_matrix(H)
    assert a.entries == [list(r) for r in m.rows()]

def test_identity_monodromy_acts_trivially():
    c = Permutation([[0, 1, 2]], size=3)
    rep = build_rep(CutData([c, c, c]))
    a = induced_fiber_action(rep, TwistWord(), Intertwiner(list(range(rep.degree))))
    assert a == IntMatrix.identity(rep.degree + 1)

def test_induced_action_rejects_non_intertwiner():
    c = Permutation([[0, 1]], size=2)
    rep = build_rep(CutData([c, Permutation([0, 1])]))
    with pytest.raises(PreconditionError):
        induced_fiber_action(rep, H, Intertwiner([1, 0, 3, 2]))

def test_fixed_and_peripheral_full_boundary():
    fix, per, witness = fixed_and_peripheral(IntMatrix.identity(3), IntMatrix.identity(3))
    assert (fix, per, witness) == (3, 3, None)

def test_fixed_and_peripheral_witness():
    boundary = IntMatrix.from_columns([[1, 0, 0]], 3)
    fix, per, witness = fixed_and_peripheral(IntMatrix.identity(3), boundary)
    assert (fix, per) == (3, 1)
    assert witness == [0, 1, 0]

def test_fixed_and_peripheral_swap_action():
    # swapping the first two classes fixes their sum and the third class
    action = IntMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    boundary = IntMatrix.from_columns([[0, 0, 1]], 3)
    fix, per, witness = fixed_and_peripheral(action, boundary)
    assert (fix, per) == (2, 1)
    assert witness == [1, 1, 0]
    assert wang_b1(action) == 3

def test_fixed_and_peripheral_primitive_witness():
    action = IntMatrix([[1, 0, 0], [0, 1, 0], [2, 4, 1]])
    fix, per, witness = fixed_and_peripheral(action, IntMatrix.from_columns([[0, 0, 1]], 3))
    assert (fix, per) == (2, 1)
    # the kernel of action - I is spanned by (2, -1, 0) and (0, 0, 1)
    assert witness == [2, -1, 0]

def test_slope_zero_one_keeps_fibered_class():
    rep, tau = degree_one()
    for text in ("Dx Dy", "Dx^2 Dy^-1", "Dy^5 Dx^-1"):
        cert = b1_filled_cover(parse_twist_word(text), rep, tau, Slope(0, 1))
        assert cert.b1 >= 1

def test_filled_cover_requires_lift():
    c = Permutation([[0, 1]], size=2)
    rep = build_rep(CutData([c, c]))
    word = parse_twist_word("Dx Dy^2")
    tau = canonical_intertwiner(rep, word)
    assert tau is not None
    assert not surgery_lifts(rep, tau, None, Slope(1, 0))
    with pytest.raises(PreconditionError):
        b1_filled_cover(word, rep, tau, Slope(1, 0))

def test_blockwise_rewrite_matches_explicit_rs():
    c = Permutation([[0, 1]], size=2)
    rep = build_rep(CutData([c, c]))
    word = parse_twist_word("Dx Dy^2")
    tau = canonical_intertwiner(rep, word)
    assert tau is not None
    for s in (None, Slope(2, 1), Slope(0, 1)):
        if s is not None:
            assert surgery_lifts(rep, tau, None, s, monodromy=word)
        p = mapping_torus_presentation(word, s)
        explicit = reidemeister_schreier(p, CosetAction.from_cover(rep, tau)).abelianization()
        assert mapping_torus_cover_homology(word, rep, tau, s) == explicit

def random_case1_covers(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(2, 5)
        a = Permutation(rng.sample(range(d), d))
        b = Permutation(rng.sample(range(d), d))
        try:
            rep = build_rep(CutData([a, ~a, b, ~b]))
        except DisconnectedCoverError:
            continue
        blocks = []
        for _ in range(rng.randint(1, 2)):
            blocks.append((TwistGen.X, rng.choice([-2, -1, 1, 2, 3])))
            blocks.append((TwistGen.Y, 4 * rng.choice([-1, 1])))
        word = TwistWord(blocks)
        tau = canonical_intertwiner(rep, word)
        assert tau is not None
        out.append((rng, rep, word, tau))
    return out

def test_wang_sequence_matches_rewriting():
    for _, rep, word, tau in random_case1_covers(5, 25):
        unfilled_b1, _ = mapping_torus_cover_homology(word, rep, tau)
        assert unfilled_b1 == wang_b1(induced_fiber_action(rep, word, tau))

def test_witness_implies_positive_b1():
    swap = Permutation([[0, 1]], size=2)
    rep = build_rep(CutData([swap] * 4))
    word = parse_twist_word("Dx Dy^4")
    tau = canonical_intertwiner(rep, word)
    # tau has order 2 and P_beta is trivial on this cover
    assert surgery_lifts(rep, tau, None, Slope(2, 1), monodromy=word)
    cert = b1_filled_cover(word, rep, tau, Slope(2, 1))
    assert cert.unfilled_b1 == 1 + cert.fix_rank
    checked = 0
    for rng, rep, word, tau in random_case1_covers(11, 60):
        for _ in range(6):
            mu = rng.randint(1, 8)
            lam = rng.randint(-8, 8)
            if gcd(mu, lam) != 1:
                continue
            s = Slope(mu, lam)
            if not surgery_lifts(rep, tau, None, s, monodromy=word):
                continue
            cert = b1_filled_cover(word, rep, tau, s)
            assert cert.unfilled_b1 == 1 + cert.fix_rank
            if cert.witness is not None:
                assert cert.b1 >= 1
            checked += 1

def test_boundary_classes_count():
    c = Permutation([[0, 1]], size=2)
    rep = build_rep(CutData([c, c]))
    assert boundary_classes(rep).ncols == 4

def test_certificate_jsonable():
    cert = HomologyCertificate(2, [3], 3, 1, [0, 1, 0], unfilled_b1=4)
    data = cert.to_jsonable()
    assert data == dict(b1=2, torsion=[3], fix_rank=3, peripheral_rank=1, witness=[0, 1, 0], unfilled_b1=4)
    assert HomologyCertificate.from_jsonable(data) == cert

def test_low_index_free_group():
    result = low_index_subgroups(GroupPresentation.free(2), 2)
    assert result.complete
    assert len(result.of_index(1)) == 1
    assert len(result.of_index(2)) == 3

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_low_index_cyclic(n):
    result = low_index_subgroups(GroupPresentation.free(1), n)
    assert len(result.of_index(n)) == 1

def test_low_index_a5_triangle_group():
    x, y = FreeWord.generator(1), FreeWord.generator(2)
    p = GroupPresentation(2, [x ** 2, y ** 3, (x * y) ** 5])
    result = low_index_subgroups(p, 6)
    assert result.complete
    counts = {i: len(result.of_index(i)) for i in range(1, 7)}
    assert counts == {1: 1, 2: 0, 3: 0, 4: 0, 5: 5, 6: 6}
    for action in result:
        for r in p.relators:
            assert action.acts_trivially(r)

def test_low_index_budget_flags_partial():
    result = low_index_subgroups(GroupPresentation.free(2), 4, node_budget=3)
    assert not result.complete
