import pytest
from hypothesis import given
from hypothesis import strategies as st

from toroidal_weyl.envelope import (H, X, Y, Bounds, PbwElement, TruncationError, garland_coeffs, in_left_ideal,
                                    is_block_invariant, sym_lambda, tensor_mul, verify_garland)

letters = st.tuples(st.sampled_from([X, Y, H]), st.integers(-2, 2))
words = st.lists(letters, max_size=3)


@given(words, words, words)
def test_pbw_associative(a, b, c):
    bounds = Bounds(9, 8)
    A, B, C = (PbwElement.word(w, bounds=bounds) for w in (a, b, c))
    assert (A * B) * C == A * (B * C)


@given(letters, letters)
def test_commutator_is_bracket(p, q):
    P, Q = PbwElement.word([p]), PbwElement.word([q])
    comm = P * Q - Q * P
    if p[0] == q[0]:
        assert comm.is_zero()
    elif {p[0], q[0]} == {X, Y}:
        sign = 1 if p[0] == X else -1
        assert comm == PbwElement.letter(H, p[1] + q[1]).scale(sign)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_garland_divided_powers(j):
    assert verify_garland(j)["ok"]


def test_garland_printed_form_fails():
    rep = verify_garland(1, form="printed")
    assert not rep["ok"]


def test_garland_series_first_terms():
    p = garland_coeffs(2)
    # p^(1) = -h_1
    assert p[1] == PbwElement.letter(H, 1).scale(-1)


def test_left_ideal_membership():
    assert in_left_ideal(PbwElement.word([(Y, 0), (X, 3)]))
    assert not in_left_ideal(PbwElement.letter(Y, 0))


def test_truncation_is_an_error():
    with pytest.raises(TruncationError):
        PbwElement.word([(X, 9)], bounds=Bounds(8, 8))


def test_sym_lambda_invariant():
    counts = (2, 1)
    s = sym_lambda(counts, 0, (1, 0))
    assert is_block_invariant(counts, s)
    assert is_block_invariant(counts, tensor_mul(s, sym_lambda(counts, 1, (0, 2))))
