import pytest
from hypothesis import given
from hypothesis import strategies as st

from toroidal_weyl.characters import fock_product
from toroidal_weyl.vertex import (FockVector, borcherds_sides, borcherds_spot_checks, check_translation,
                                  check_vacuum_axioms, fock_graded_dim, gamma1_lattice, gamma_lattice, heis_mode,
                                  low_degree_states, nproduct, verify_central_assignments, verify_nproduct_table,
                                  vertex_mode)

LAT = gamma_lattice(2)  # basis: delta_2, Lambda_2
D2, L2 = (1, 0), (0, 1)


def st_(letters=(), gamma=(0, 0), lat=LAT):
    return FockVector.state(lat, letters, gamma)


def test_lattice_data():
    assert LAT.pair(D2, L2) == 1 and LAT.pair(D2, D2) == 0 and LAT.pair(L2, L2) == 0
    assert LAT.eps(D2, L2) == -1 and LAT.eps(L2, D2) == 1
    assert LAT.check_cocycle() and gamma_lattice(3).check_cocycle()


def test_heis_zero_mode_and_contractions():
    assert heis_mode(D2, 0, st_(gamma=L2)) == st_(gamma=L2)
    assert heis_mode(D2, 1, st_(((0, 1),))).is_zero()
    assert heis_mode(L2, 1, st_(((0, 1),))) == st_()
    assert heis_mode(D2, 2, FockVector.vacuum(LAT)).is_zero()


def test_vertex_mode_examples():
    q, p = (1, 0), (-1, 0)
    assert vertex_mode(q, -1, st_(gamma=p)) == st_(gamma=(0, 0))
    assert vertex_mode((2, 0), -2, st_(gamma=(1, 0))) == st_(((0, 1),), (3, 0)).scale(2)


def test_cocycle_twist():
    a = vertex_mode(D2, -1, st_(gamma=L2))
    b = vertex_mode(L2, -1, st_(gamma=D2))
    # e^{delta}_(-1) e^{Lambda} carries z^{<delta,Lambda>} = z: its (-1) mode is the z^0 coefficient
    a0 = vertex_mode(D2, -2, st_(gamma=L2))
    b0 = vertex_mode(L2, -2, st_(gamma=D2))
    assert a.is_zero() and b.is_zero()
    assert a0 == st_(gamma=(1, 1)).scale(-1)
    assert b0 == st_(gamma=(1, 1))


def test_printed_lines():
    q, p = (1, 0), (-1, 0)
    # (Lambda(-1) e^{q delta})_(1) (delta(-1) e^{p delta}) = e^{(q+p) delta}
    assert nproduct(st_(((1, 1),), q), 1, st_(((0, 1),), p)) == st_(gamma=(0, 0))
    for n in range(0, 3):
        assert nproduct(st_(((0, 1),), q), n, st_(((0, 1),), p)).is_zero()


def test_lambda_zero_mode_uses_p():
    # computed from first principles: p_i, not the printed q_i
    q, p = (1, 0), (2, 0)
    got = nproduct(st_(((1, 1),), q), 0, st_(gamma=p))
    assert got == st_(gamma=(3, 0)).scale(2)


@pytest.mark.parametrize("n", [2, 3])
def test_table_report(n):
    rep = verify_nproduct_table(n)
    assert rep["discrepancies"] == ["(Λ_i(-1)e^{qδ})_(0) e^{pδ} = q_i e^{(q+p)δ}"]
    for line in rep["lines"]:
        assert line["checked"] > 0


def test_vacuum_and_translation():
    for lat in (LAT, gamma1_lattice(3)):
        assert check_vacuum_axioms(lat, low_degree_states(lat))
        assert check_translation(lat)


def test_borcherds_spot_checks_small():
    assert borcherds_spot_checks(gamma1_lattice(2), count=20, seed=5)["ok"]
    assert borcherds_spot_checks(LAT, count=10, seed=5)["ok"]


@given(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2), st.integers(0, 3), st.integers(0, 3))
def test_borcherds_on_generators(p, q, n, ia, ib):
    pool = [st_(), st_(gamma=D2), st_(gamma=L2), st_(((0, 1),)), st_(((1, 1),))]
    a, b, c = pool[ia], pool[ib], st_(gamma=(1, 1))
    lhs, rhs = borcherds_sides(a, b, c, p, q, n)
    assert lhs == rhs


def test_fock_dims():
    assert fock_graded_dim(2, 4) == [1, 1, 2, 3, 5]
    assert fock_graded_dim(3, 2)[2] == 5
    for n in (2, 3):
        assert fock_graded_dim(n, 10) == fock_product(n, 10)


def test_central_assignments_small():
    rep = verify_central_assignments(2, 2, D=2)
    assert rep["ok"], rep


def test_creation_on_vacuum():
    lat = gamma1_lattice(3)
    a = FockVector.state(lat, ((0, 1),))
    assert nproduct(a, -1, FockVector.vacuum(lat)) == a
