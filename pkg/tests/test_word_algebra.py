#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Tests for fibercover.word_algebra"""

import pytest
from hypothesis import given, settings, strategies as st

from fibercover.exceptions import WordSyntaxError
from fibercover.word_algebra import (
    FreeWord,
    X,
    Y,
    SL2Matrix,
    R_MATRIX,
    L_MATRIX,
    TwistGen,
    TwistWord,
    TwistEndo,
    parse_twist_word,
    twist_endo,
    monodromy_matrix,
    boundary_word,
    bundle_invariants,
    sl2_conjugacy_witness_check,
  )

blocks_strategy = st.lists(
    st.tuples(st.sampled_from([TwistGen.X, TwistGen.Y]), st.integers(min_value=-3, max_value=3).filter(lambda e: e != 0)),
    max_size=12,
  )

def test_parse_simple():
    assert parse_twist_word("Dx Dy").blocks == ((TwistGen.X, 1), (TwistGen.Y, 1))

def test_parse_exponents_and_merge():
    word = parse_twist_word("Dx^2 Dy^-4 Dx Dy^-4 Dx")
    assert word.blocks == (
        (TwistGen.X, 2), (TwistGen.Y, -4), (TwistGen.X, 1), (TwistGen.Y, -4), (TwistGen.X, 1),
      )
    assert parse_twist_word("Dx Dx^2 Dy").blocks == ((TwistGen.X, 3), (TwistGen.Y, 1))

def test_parse_grouping():
    word = parse_twist_word("(Dx Dy)^18")
    assert len(word) == 36
    assert word.blocks[0] == (TwistGen.X, 1)
    assert word.blocks[-1] == (TwistGen.Y, 1)
    assert parse_twist_word("(Dx Dy^-1 Dx)^2") == parse_twist_word("Dx Dy^-1 Dx^2 Dy^-1 Dx")

@pytest.mark.parametrize("text,position", [
    ("Dx^0", 3),
    ("Dz", 0),
    ("Dx Dy^", 6),
    ("(Dx Dy", 6),
    ("Dx )", 3),
  ])
def test_parse_errors(text, position):
    with pytest.raises(WordSyntaxError) as info:
        parse_twist_word(text)
    assert info.value.position == position

def test_to_text_reparses():
    word = parse_twist_word("Dx^2 Dy^-4 Dx")
    assert parse_twist_word(word.to_text()) == word

def test_twist_action_list():
    dx = twist_endo(parse_twist_word("Dx"))
    dy = twist_endo(parse_twist_word("Dy"))
    assert dx.apply(X) == X
    assert dx.apply(Y) == FreeWord.from_str("yx")
    assert dy.apply(X) == FreeWord.from_str("yx")
    assert dy.apply(Y) == Y

def test_identity_endo():
    assert twist_endo(TwistWord()) == TwistEndo.identity()

def test_h_image_of_x():
    h = twist_endo(parse_twist_word("Dx Dy"))
    assert h.apply(X) == FreeWord.from_str("yxx")
    assert h.apply(X).abelianize(2) == [2, 1]

@pytest.mark.parametrize("text,expected", [
    ("Dx Dy", SL2Matrix(2, 1, 1, 1)),
    ("Dy^5 Dx^-1", SL2Matrix(1, -1, 5, -4)),
    ("(Dx Dy^-1 Dx)^2", SL2Matrix(-1, 0, 0, -1)),
    ("(Dx Dy)^3", SL2Matrix(13, 8, 8, 5)),
  ])
def test_monodromy_golden(text, expected):
    assert monodromy_matrix(parse_twist_word(text)) == expected

def test_negated_rl_conjugate_to_l5_r_inverse():
    C = SL2Matrix(-1, 1, -2, 1)
    A = -(R_MATRIX @ L_MATRIX)
    B = (L_MATRIX ** 5) @ R_MATRIX.inverse()
    assert sl2_conjugacy_witness_check(A, B, C)

def test_conjugacy_trivial():
    A = SL2Matrix(2, 1, 1, 1)
    assert sl2_conjugacy_witness_check(A, A, SL2Matrix.identity())
    assert not sl2_conjugacy_witness_check(A, SL2Matrix(1, 1, 1, 2), SL2Matrix.identity())

def test_boundary_word_images():
    beta = boundary_word()
    assert twist_endo(parse_twist_word("Dx")).apply(beta) == beta
    assert twist_endo(parse_twist_word("Dy")).apply(beta) == Y * beta * Y.inverse()
    assert TwistEndo.identity().apply(beta) == beta

def test_invariants_simple():
    inv = bundle_invariants(parse_twist_word("Dx Dy"))
    assert inv.variant() == (1, 1)

def test_invariants_i6():
    i = parse_twist_word("Dx^2 Dy^-4 Dx Dy^-4 Dx")
    inv = bundle_invariants(i ** 6)
    assert inv.variant() == (24, 4)

def test_invariants_g():
    inv = bundle_invariants(parse_twist_word("Dy^5 Dx^-1"))
    assert inv.variant() == (-1, 5)
    assert inv.variant(swapped=True) == (5, 1)

def test_invariants_unavailable():
    inv = bundle_invariants(parse_twist_word("Dx^3"))
    assert 'standard' in inv.unavailable
    assert inv.variant(swapped=True) == (0, 3)

@settings(max_examples=200, deadline=None)
@given(blocks_strategy)
def test_matrix_matches_abelianization(blocks):
    word = TwistWord(blocks)
    endo = twist_endo(word)
    matrix = monodromy_matrix(word)
    assert matrix.det() == 1
    assert endo.matrix() == matrix

@settings(max_examples=100, deadline=None)
@given(blocks_strategy, blocks_strategy)
def test_concatenation_composes(blocks1, blocks2):
    w1 = TwistWord(blocks1)
    w2 = TwistWord(blocks2)
    assert twist_endo(w1 * w2) == twist_endo(w1).compose(twist_endo(w2))
    assert monodromy_matrix(w1 * w2) == monodromy_matrix(w1) @ monodromy_matrix(w2)

@settings(max_examples=200, deadline=None)
@given(blocks_strategy)
def test_boundary_maps_to_conjugate(blocks):
    beta = boundary_word()
    image = twist_endo(TwistWord(blocks)).apply(beta)
    w = image.conjugator_to(beta)
    assert w is not None
    assert w * beta * w.inverse() == image

@settings(max_examples=100, deadline=None)
@given(blocks_strategy)
def test_cyclic_normalization_is_conjugate(blocks):
    word = TwistWord(blocks)
    normalized = word.cyclically_normalized()
    assert monodromy_matrix(normalized).trace() == monodromy_matrix(word).trace()
    if len(normalized) > 1:
        assert normalized.blocks[0][0] is TwistGen.X
        assert normalized.blocks[-1][0] is TwistGen.Y
