# 組み込みの表示（理論）
from src.algebra.term import App, Equation, Presentation, Signature, Var

x1, x2, x3 = Var(1), Var(2), Var(3)


def _op(symbol, *args):
    return App(symbol, tuple(args))


def monoid_presentation(name="monoid", mul="mul", unit="e") -> Presentation:
    sig = Signature(name, {mul: 2, unit: 0})
    e = _op(unit)
    return Presentation(
        sig,
        (
            Equation(_op(mul, x1, _op(mul, x2, x3)), _op(mul, _op(mul, x1, x2), x3), 3),
            Equation(_op(mul, e, x1), x1, 1),
            Equation(_op(mul, x1, e), x1, 1),
        ),
    )


def semilattice_presentation(name="sl", join="join") -> Presentation:
    sig = Signature(name, {join: 2})
    return Presentation(
        sig,
        (
            Equation(_op(join, x1, x1), x1, 1),
            Equation(_op(join, x1, x2), _op(join, x2, x1), 2),
            Equation(_op(join, _op(join, x1, x2), x3), _op(join, x1, _op(join, x2, x3)), 3),
        ),
    )


def pointed_presentation(name="pointed", point="c") -> Presentation:
    return Presentation(Signature(name, {point: 0}), ())


def empty_presentation(name="empty") -> Presentation:
    return Presentation(Signature(name, {}), ())


def group_presentation(name="grp") -> Presentation:
    """逆元つきのモノイド"""
    base = monoid_presentation(name)
    sig = Signature(name, {"mul": 2, "e": 0, "inv": 1})
    e = _op("e")
    return Presentation(
        sig,
        base.equations
        + (
            Equation(_op("mul", _op("inv", x1), x1), e, 1),
            Equation(_op("mul", x1, _op("inv", x1)), e, 1),
        ),
    )


def z2_module_presentation(name="z2mod") -> Presentation:
    """Z/2 上のベクトル空間: 可換群で x + x = 0"""
    sig = Signature(name, {"add": 2, "zero": 0})
    zero = _op("zero")
    return Presentation(
        sig,
        (
            Equation(_op("add", x1, _op("add", x2, x3)), _op("add", _op("add", x1, x2), x3), 3),
            Equation(_op("add", x1, x2), _op("add", x2, x1), 2),
            Equation(_op("add", zero, x1), x1, 1),
            Equation(_op("add", x1, x1), zero, 1),
        ),
    )


def collapse_presentation(name="collapse") -> Presentation:
    """x1 = x2 の 1 等式のみ（1 要素以下の carrier に限る）"""
    return Presentation(Signature(name, {}), (Equation(x1, x2, 2),))
