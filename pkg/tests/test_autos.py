import pytest

from toroidal_weyl.autos import (AdExp, NilpotencyError, ThetaAutos, check_automorphism, verify_prom5_brackets,
                                 verify_rp1)
from toroidal_weyl.liealg import LieAlgebraError


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4)])
def test_rp1_and_claims(kind, rank):
    rep = verify_rp1(kind, rank, 2)
    assert rep["ok"], rep
    assert {x["identity"] for x in rep["identities"]} == {"RP1", "claim1", "claim2"}


def test_claim2_printed_superscript_fails_for_triality():
    rep = verify_rp1("D", 4, 2)
    assert rep["findings"] and rep["findings"][0]["identity"] == "claim2_printed"


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4), ("D", 5)])
def test_bracket_lemmas(kind, rank):
    assert verify_prom5_brackets(kind, rank, 2)["ok"]


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4)])
def test_automorphisms_preserve_brackets(kind, rank):
    A = ThetaAutos(kind, rank, 2)
    for psi in (A.psi0, A.psi_theta, A.psi):
        assert check_automorphism(psi, A.T, pairs=100, seed=3)["ok"]


def test_nilpotency_cap():
    A = ThetaAutos("A", 3, 2)
    with pytest.raises(NilpotencyError):
        AdExp(A.T.d(1) + A.e0, cap=2)(A.e(0, 0, (0,)))


def test_a_even_rejected():
    with pytest.raises(LieAlgebraError):
        ThetaAutos("A", 4, 2)
