#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Tests for fibercover.slope_calculus"""

from math import gcd

import pytest
from hypothesis import given, settings, assume, strategies as st

from fibercover.exceptions import PatternMismatchError, SlopeError
from fibercover.word_algebra import parse_twist_word, bundle_invariants
from fibercover.slope_calculus import (
    Slope,
    CaseTag,
    FramingTransform,
    BUILTIN_TRANSFORMS,
    apply_framing,
    invert_framing,
    check_hypothesis,
    hypothesis_check,
    fig8_exception_scan,
    thm12_exception_scan,
    sister_exception_scan,
    pell_family,
  )

H = parse_twist_word("Dx Dy")
G = parse_twist_word("Dy^5 Dx^-1")
I_WORD = parse_twist_word("Dx^2 Dy^-4 Dx Dy^-4 Dx")
MINUS_ONE = parse_twist_word("(Dx Dy^-1 Dx)^2")

def by_name(name):
    return next(t for t in BUILTIN_TRANSFORMS if t.name == name)

def test_slope_rejects_non_coprime():
    with pytest.raises(SlopeError):
        Slope(2, 4)
    with pytest.raises(SlopeError):
        Slope(0, 0)

def test_slope_normalized():
    assert Slope(-3, 1).normalized() == Slope(3, -1)
    assert Slope(0, -1).normalized() == Slope(0, 1)

def test_minus_one_h_to_g():
    word, slope = apply_framing(by_name("(-1)h -> g"), MINUS_ONE * H, Slope(3, 5))
    assert word == G
    assert slope == Slope(3, 2)

def test_h_cubed_to_i():
    word, slope = apply_framing(by_name("h^3 -> i"), H ** 3, Slope(2, 7))
    assert word == I_WORD
    assert slope == Slope(2, 9)

def test_power_match_f_to_i6():
    word, slope = apply_framing(by_name("h^3 -> i"), H ** 18, Slope(1, 1))
    assert word == I_WORD ** 6
    assert slope == Slope(1, 7)
    inv = bundle_invariants(word)
    assert inv.variant() == (24, 4)

def test_power_match_f_to_g18():
    word, slope = apply_framing(by_name("h^2 -> g^2"), H ** 18, Slope(1, 1))
    assert word == G ** 18
    assert slope == Slope(1, -8)

def test_identity_transform():
    word, slope = apply_framing(FramingTransform.identity(H), H, Slope(5, 4))
    assert word == H
    assert slope == Slope(5, 4)

def test_pattern_mismatch():
    with pytest.raises(PatternMismatchError):
        apply_framing(by_name("h^3 -> i"), H ** 2, Slope(1, 1))

def test_builtin_witnesses():
    for t in BUILTIN_TRANSFORMS:
        assert t.matrices_conjugate() is True, t.name

@settings(max_examples=200, deadline=None)
@given(st.integers(-60, 60), st.integers(-60, 60))
def test_slope_maps_preserve_coprimality(mu, lam):
    assume(gcd(mu, lam) == 1)
    s = Slope(mu, lam)
    for t in BUILTIN_TRANSFORMS:
        image = t.map_slope(s, 3)
        assert gcd(image.mu, image.lam) == 1

@settings(max_examples=100, deadline=None)
@given(st.integers(-60, 60), st.integers(-60, 60))
def test_framing_then_inverse(mu, lam):
    assume(gcd(mu, lam) == 1)
    s = Slope(mu, lam)
    t = by_name("h^2 -> (-h)^2")
    word, slope = apply_framing(t, H ** 2, s)
    back_word, back_slope = apply_framing(invert_framing(t), word, slope)
    assert back_word == H ** 2
    assert back_slope == s

def test_transform_from_jsonable():
    t = FramingTransform.from_jsonable(dict(source="Dx Dy", target="Dx Dy", slope_map=[[1, 0], [2, 1]]))
    assert t.map_slope(Slope(1, 1)) == Slope(1, 3)

def test_case_iii_examples():
    assert hypothesis_check('iii', 24, Slope(1, 7))
    assert not hypothesis_check('iii', 1, Slope(1, 1))

def test_case_ii_degenerate():
    result = check_hypothesis(CaseTag.II, 1, Slope(1, 1))
    assert not result.holds
    assert result.degenerate

def test_boundary_sum_is_false():
    # 2/|8 - 4| + 1/2 == 1 exactly
    result = check_hypothesis('iii', 8, Slope(1, 2))
    assert not result.holds
    assert not result.degenerate

def test_case_3b_guard():
    assert hypothesis_check('3b', 1, Slope(1, 2))
    assert hypothesis_check('3b', 10, Slope(1, 5))
    assert not hypothesis_check('3b', 1, Slope(3, 1))

def test_case_4b_guard_uses_cyclic_modulus():
    result = check_hypothesis('4b', 1, Slope(13, 4), m=8)
    assert result.holds
    assert "|N| = 5" in result.reason
    assert not hypothesis_check('4b', 1, Slope(9, 4), m=8)

def test_fig8_scan():
    expected = {Slope(3, 1), Slope(-3, -1), Slope(-3, 1), Slope(3, -1)}
    assert fig8_exception_scan(50) == expected
    assert fig8_exception_scan(5) == expected

def test_fig8_scan_even_lambda_empty():
    assert fig8_exception_scan(20, lambdas=range(-20, 21, 2)) == set()

def test_thm12_scan():
    exceptions = thm12_exception_scan(100)
    assert all(s.mu == 0 for s in exceptions)
    assert Slope(0, 1) in exceptions
    assert Slope(1, 6) not in exceptions

def test_sister_scan_small():
    exceptions = sister_exception_scan(10)
    assert Slope(1, 1) in exceptions
    assert Slope(11, 3) not in exceptions

def test_pell_family():
    family = pell_family(3)
    assert family[0] == Slope(-1, 2)
    assert family[1] == Slope(-7, 12)
    for s in family:
        assert s.lam > 0
        assert (s.mu + 2 * s.lam) ** 2 - 2 * s.lam ** 2 == 1
        assert not hypothesis_check(CaseTag.CASE_5A, 1, s)
