from src.algebra.term import (
    App,
    Equation,
    Presentation,
    Signature,
    Var,
    check_term,
    commutation_equation,
    generator_term,
    max_var,
    normalize_variables,
    size,
    substitute,
)
from src.common.errors import ArityError, InputError

from pytest import raises

x1, x2, x3, x4 = Var(1), Var(2), Var(3), Var(4)


def join(a, b):
    return App("join", (a, b))


def test_term_printing_and_size():
    t = join(x1, App("e"))
    assert str(t) == "join(x1,e())"
    assert size(t) == 2
    assert max_var(t) == 1


def test_check_term_rejects_unknown_symbol_and_arity():
    sig = Signature("s", {"join": 2})
    check_term(join(x1, x2), sig)
    with raises(InputError):
        check_term(App("meet", (x1, x2)), sig)
    with raises(InputError):
        check_term(App("join", (x1,)), sig)


def test_equation_var_count():
    with raises(ArityError):
        Equation(x3, x1, 2)
    with raises(ArityError):
        Var(0)


def test_substitute_is_simultaneous():
    t = join(x1, x2)
    assert substitute(t, [x2, x1]) == join(x2, x1)
    with raises(ArityError):
        substitute(t, [x1])
    with raises(ArityError):
        substitute(t, [x1, x2, x3], var_count=2)


def test_normalize_variables():
    assert normalize_variables(join(x3, join(x1, x3))) == join(x1, join(x2, x1))


def test_commutation_equation_binary():
    f = generator_term("f", 2)
    g = generator_term("g", 2)
    eq = commutation_equation(f, 2, g, 2)
    # x_{ij} は x_{(i-1)m+j}
    assert eq.var_count == 4
    assert str(eq.lhs) == "f(g(x1,x2),g(x3,x4))"
    assert str(eq.rhs) == "g(f(x1,x3),f(x2,x4))"


def test_commutation_equation_with_constant():
    eq = commutation_equation(generator_term("c", 0), 0, generator_term("g", 2), 2)
    # c = g(c, c)
    assert eq.var_count == 0
    assert str(eq.lhs) == "c()"
    assert str(eq.rhs) == "g(c(),c())"


def test_commutation_equation_unary_binary():
    eq = commutation_equation(generator_term("n", 1), 1, generator_term("g", 2), 2)
    assert str(eq.lhs) == "n(g(x1,x2))"
    assert str(eq.rhs) == "g(n(x1),n(x2))"


def test_presentation_checks_equations():
    sig = Signature("s", {"join": 2})
    with raises(InputError):
        Presentation(sig, (Equation(App("meet", (x1, x1)), x1, 1),))
    assert Presentation(sig).name == "s"


def test_signature_is_hashable():
    a = Signature("s", {"join": 2, "e": 0})
    b = Signature("s", {"e": 0, "join": 2})
    assert a == b and hash(a) == hash(b)
    assert len({a, b, Signature("s", {"join": 2})}) == 2
    pres = Presentation(a, (Equation(join(x1, x1), x1, 1),))
    assert pres in {pres}
    ops = {"join": 2}
    sig = Signature("s", ops)
    ops["meet"] = 2
    assert sig.symbols == ["join"]
