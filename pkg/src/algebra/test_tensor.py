from src.algebra.tensor import (
    coproduct_presentation,
    coproduct_with_renaming,
    commuting_tensor_presentation,
    commuting_tensor_with_renaming,
)
from src.corpus.theories import empty_presentation, pointed_presentation


def test_coproduct_renames_clashing_symbols(monoid_pres):
    plus, renaming = coproduct_with_renaming(monoid_pres, monoid_pres)
    assert renaming.left == {"mul": "mul_1", "e": "e_1"}
    assert renaming.right == {"mul": "mul_2", "e": "e_2"}
    assert plus.signature.operations == {"mul_1": 2, "e_1": 0, "mul_2": 2, "e_2": 0}
    assert len(plus.equations) == 6


def test_coproduct_keeps_disjoint_names(monoid_pres, sl_pres):
    plus = coproduct_presentation(monoid_pres, sl_pres)
    assert set(plus.signature.operations) == {"mul", "e", "join"}
    assert plus.equations == monoid_pres.equations + sl_pres.equations


def test_tensor_adds_one_equation_per_generator_pair(monoid_pres):
    tensor, renaming = commuting_tensor_with_renaming(monoid_pres, monoid_pres)
    assert len(tensor.equations) == 6 + 4
    text = [str(e) for e in tensor.equations[6:]]
    assert "mul_1(mul_2(x1,x2),mul_2(x3,x4)) = mul_2(mul_1(x1,x3),mul_1(x2,x4))" in text
    assert "e_1() = e_2()" in text


def test_tensor_with_empty_theory_adds_nothing(monoid_pres):
    tensor = commuting_tensor_presentation(monoid_pres, empty_presentation())
    assert tensor.equations == monoid_pres.equations


def test_pointed_tensor_identifies_points():
    tensor = commuting_tensor_presentation(pointed_presentation(), pointed_presentation())
    assert [str(e) for e in tensor.equations] == ["c_1() = c_2()"]
