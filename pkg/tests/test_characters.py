import pytest
from hypothesis import given
from hypothesis import strategies as st

from toroidal_weyl.characters import (BasicFreudenthal, CapMismatch, CharacterSeries, adjudicate_char,
                                      basic_char_product, freudenthal_basic, imaginary_mults, multivariate_target,
                                      product_series, q1_target, weyl_invariance_failures)
from toroidal_weyl.liealg import LieAlgebraError


def test_geometric_series():
    s = CharacterSeries.one(4).inv_one_minus(m=1)
    assert s.q1_coeffs() == [1, 1, 1, 1, 1]
    one_minus = CharacterSeries.one(4) - CharacterSeries.one(4).monomial(m=1)
    assert one_minus * s == CharacterSeries.one(4)


def test_specialize_multivariate():
    s = CharacterSeries.one(4, B=4, nq=1)
    for d in (1, 2):
        s = s.inv_one_minus(m=d, p=(1,))
    t = CharacterSeries.one(4)
    for d in (1, 2):
        t = t.inv_one_minus(m=d)
    assert s.specialize(q=True) == t


def test_cap_mismatch():
    with pytest.raises(CapMismatch):
        CharacterSeries.one(3) + CharacterSeries.one(4)


coeff = st.integers(-3, 3)
series = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(-1, 1)), coeff, max_size=6).map(
    lambda d: CharacterSeries(3, 2, 1, 0, {((), m, (p,)): c for (m, p), c in d.items() if c}))


@given(series, series, series)
def test_series_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_imaginary_mults():
    assert imaginary_mults("A", 3) == (2, 1)
    assert imaginary_mults("D", 4) == (2, 1, 1)
    assert imaginary_mults("D", 5) == (4, 1)
    with pytest.raises(LieAlgebraError):
        imaginary_mults("A", 4)


def test_product_expansions():
    # mults odd -> 1, even -> 2 for A3^(2); (1, 1, 2, ...) for D4^(3)
    assert basic_char_product("A", 3, 4).q1_coeffs() == [1, 1, 3, 4, 9]
    assert basic_char_product("D", 4, 3).q1_coeffs() == [1, 1, 2, 4]
    assert product_series(lambda p: 1, 5) == [1, 1, 2, 3, 5, 7]


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4)])
def test_freudenthal_basics(kind, rank):
    F = BasicFreudenthal(kind, rank, 4)
    assert F.mult((0,) * (F.R.l + 1)) == 1
    assert all(m > 0 for m in F.weights.values())
    assert weyl_invariance_failures(kind, rank, 4) == []
    # delta_1-string through Lambda_0 equals the product
    s = freudenthal_basic(kind, rank, 4)
    assert s.slice((0,) * F.R.l) == basic_char_product(kind, rank, 4).q1_coeffs()


def test_string_monotonicity():
    F = BasicFreudenthal("D", 4, 4)
    for beta, m in F.weights.items():
        for i in range(1, F.R.l + 1):
            up = list(beta)
            up[i] -= 1
            lam = F.R.to_weight(beta)[0]
            val = 2 * F.R.fin_pair(lam, tuple(int(k == i - 1) for k in range(F.R.l))) / F.R.simple_norm[i]
            if val < 0 and min(up) >= 0:
                # below the middle of the string, moving towards it cannot lower the multiplicity
                assert F.mult(tuple(up)) >= m


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4)])
def test_adjudication(kind, rank):
    rep = adjudicate_char(kind, rank, 6)
    assert rep["verdict"] == "full-character"
    assert rep["theta_decomposition"]["ok"]
    assert len(rep["table"]) == 7 and rep["table"][0]["full_agrees"]


@pytest.mark.parametrize("n", [2, 3])
def test_target_ratio(n):
    t = q1_target("A", 3, n, 5)
    base = freudenthal_basic("A", 3, 5)
    fock = product_series(lambda p: n - 1, 5)
    lam0 = (0, 0)
    b = base.slice(lam0)
    assert t.slice(lam0) == [sum(b[i] * fock[d - i] for i in range(d + 1)) for d in range(6)]


def test_multivariate_first_order():
    m = multivariate_target("A", 3, 2, 2, 2)
    assert m.terms.get(((0, 0), 1, (1,))) == 1
