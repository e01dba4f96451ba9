import pytest

from toroidal_weyl.presentation import (CORRECTED, FAMILIES, PRINTED, CartanGen, Presentation, RootGen, check_relation,
                                        enumerate_relations, exponent_box, extended_cartan, spanning_check,
                                        table_findings, verify_presentation)


def test_family_count():
    assert len(FAMILIES) == 19


@pytest.mark.parametrize("kind,rank", [("A", 3), ("A", 4), ("D", 4)])
def test_presentation_passes(kind, rank):
    rep = verify_presentation(kind, rank, 2)
    assert rep["ok"], [f for f in rep["families"] if f["passed"] != f["checked"]]
    assert rep["checked"] > 0


def test_jobs_do_not_change_report():
    assert verify_presentation("A", 3, 2, jobs=1) == verify_presentation("A", 3, 2, jobs=3)


def test_extended_cartan_a3():
    # derived from alpha_0 = delta - theta^0; the printed list has -1 at (0, 2)
    A = extended_cartan("A", 3)
    assert A[0][2] == -2 and A[2][0] == -1
    assert extended_cartan("A", 3, "printed")[0][2] == -1


def test_verbatim_readings_fail_somewhere():
    found = table_findings("A", 3)
    assert any(f.get("variant") == "extended Cartan matrix" for f in found)
    assert any("literal" in f.get("variant", "") for f in found)


def test_printed_table_is_checked_not_trusted():
    rep = verify_presentation("A", 3, 2, variant=PRINTED)
    assert not rep["ok"]


def test_phi_alpha0_image():
    P = Presentation("D", 4, 2, CORRECTED)
    T = P.T
    img = P.phi(CartanGen(0, (1,)))
    want = T.loop(P.gp.h_theta_sum(), (0, 1)).scale(-1) + T.K(1, (0, 1)).scale(3)
    assert img == want


def test_single_relation_witness():
    P = Presentation("A", 3, 2)
    inst = next(iter(enumerate_relations(P, exponent_box(2, 1), ["xiii"])))
    assert check_relation(P, inst).ok


def test_spanning_smoke():
    assert spanning_check(Presentation("A", 3, 2))["ok"]
