import pytest

from toroidal_weyl.weyl import (HighestWeight, InvariantAlgebra, check_f0_square_bracket, check_h0, comarks,
                                level_one_relations, marks, verify_targets, weyl_presentation)


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4), ("D", 5)])
def test_h0_image_and_level(kind, rank):
    rep = check_h0(kind, rank, 2)
    assert rep["ok"], rep
    assert HighestWeight.basic(len(comarks(kind, rank)) - 1).level(kind, rank) == 1


def test_marks():
    assert marks("D", 4) == (1, 2, 1)
    assert comarks("D", 4) == (1, 2, 3)


@pytest.mark.parametrize("m", [(0,), (1,), (-1,), (2,)])
def test_f0_square_bracket(m):
    assert check_f0_square_bracket("A", 3, 2, m)["ok"]


def test_f0_square_bracket_n3():
    assert check_f0_square_bracket("D", 4, 3, (1, 0))["ok"]


def test_level_one_relations_in_plus():
    rels = level_one_relations("A", 3, 3)
    assert all(r["in_plus"] for r in rels)
    assert any(r["operator"] == "f_0^2" for r in rels)


def test_schema_and_invariant_algebra():
    lam = HighestWeight((1, 0, 0))
    W = weyl_presentation("A", 3, 3, lam, plus=True)
    assert W.generator == "v_Λ^+"
    assert any(r.operator == "f_0^2" for r in W.relations)
    assert InvariantAlgebra(lam, 3).level_one_form() == "C[y2^±1,y3^±1]"
    assert InvariantAlgebra(lam, 3, plus=True).level_one_form() == "C[y2,y3]"
    assert "S2" in InvariantAlgebra(HighestWeight((2, 1, 0)), 2).describe()
    with pytest.raises(ValueError):
        HighestWeight((-1, 0))


@pytest.mark.parametrize("kind,rank,n", [("A", 3, 2), ("A", 3, 3), ("D", 4, 2)])
def test_character_targets(kind, rank, n):
    rep = verify_targets(kind, rank, n, 5)
    assert rep["ok"], rep
