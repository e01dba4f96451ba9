import pytest

from toroidal_weyl.liealg import LieAlgebraError, build_simple, check_aut, check_theta_table, grade, twist_config

CONFIGS = [("A", 3), ("A", 4), ("A", 5), ("D", 4), ("D", 5)]


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4)])
def test_chevalley_jacobi_and_form(kind, rank):
    g = build_simple(kind, rank)
    assert g.check_jacobi() == []
    assert g.check_form() == []


@pytest.mark.parametrize("kind,rank", CONFIGS)
def test_diagram_automorphism(kind, rank):
    gp = grade(kind, rank)
    assert check_aut(gp.mu) == []
    assert sum(gp.dims()) == gp.g.dim
    assert gp.check_g0_chevalley() == []


@pytest.mark.parametrize("kind,rank,dims", [("A", 3, (2, 1)), ("D", 4, (2, 1, 1)), ("D", 5, (4, 1)), ("A", 5, (3, 2))])
def test_cartan_eigenspace_dims(kind, rank, dims):
    assert grade(kind, rank).cartan_dims() == dims


@pytest.mark.parametrize("kind,rank", [("A", 3), ("A", 5), ("D", 4), ("D", 5)])
def test_theta_triples(kind, rank):
    assert check_theta_table(grade(kind, rank)) == []


def test_g0_cartan_matrices():
    assert grade("A", 3).cartan0 == ((2, -2), (-1, 2))
    assert grade("D", 4).cartan0 == ((2, -3), (-1, 2))


def test_unsupported():
    with pytest.raises(LieAlgebraError):
        twist_config("B", 3)
    with pytest.raises(LieAlgebraError):
        twist_config("D", 3)
    with pytest.raises(LieAlgebraError):
        grade("A", 4).theta_triple(0)
