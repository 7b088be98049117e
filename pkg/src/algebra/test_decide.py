from src.algebra.decide import (
    Proved,
    Refuted,
    Unknown,
    decide_equal,
    prove_bounded,
    recheck_refutation,
    refute_in_models,
)
from src.algebra.term import App, Equation, Var, commutation_equation, generator_term
from src.common.errors import ArityError
from src.corpus.theories import group_presentation, monoid_presentation, semilattice_presentation

from pytest import raises

x1, x2 = Var(1), Var(2)


def _mul(a, b):
    return App("mul", (a, b))


def _self_commutation(symbol):
    f = generator_term(symbol, 2)
    return commutation_equation(f, 2, f, 2)


def test_unit_law_is_proved():
    result = decide_equal(monoid_presentation(), Equation(_mul(x1, App("e")), x1, 1), 2, 1)
    assert isinstance(result, Proved)
    assert result.certificate.depth_bound == 2


def test_join_commutes_with_itself():
    # AC の並べ替えは項の大きさを変えないので深さ 3 で足りる
    result = decide_equal(semilattice_presentation(), _self_commutation("join"), 3, 2)
    assert isinstance(result, Proved)


def test_monoid_commutativity_is_refuted_on_three_elements():
    eq = Equation(_mul(x1, x2), _mul(x2, x1), 2)
    # 2 元のモノイドはすべて可換
    assert refute_in_models(monoid_presentation(), eq, 2) is None
    result = decide_equal(monoid_presentation(), eq, 2, 3)
    assert isinstance(result, Refuted)
    assert result.model.k == 3
    assert result.lhs_value != result.rhs_value
    assert recheck_refutation(eq, result)


def test_group_self_commutation_is_unknown_at_small_bounds():
    result = decide_equal(group_presentation(), _self_commutation("mul"), 3, 2)
    assert isinstance(result, Unknown)
    assert (result.depth_bound, result.model_bound) == (3, 2)


def test_prove_bounded_does_not_prove_false_equation():
    eq = Equation(_mul(x1, x2), _mul(x2, x1), 2)
    assert prove_bounded(monoid_presentation(), eq, 3) is None


def test_bounds_must_be_positive():
    with raises(ArityError):
        decide_equal(monoid_presentation(), Equation(x1, x1, 1), 0, 1)
