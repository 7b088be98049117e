# 表示レベルの構成: 余積 S + T と可換テンソル S ⊙ T
from src.algebra.term import (
    App,
    Equation,
    Presentation,
    Signature,
    Term,
    Var,
    commutation_equation,
    generator_term,
)

from dataclasses import dataclass, field
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Renaming:
    """余積で付け替えた記号の記録（元の記号 -> 新しい記号）"""

    left: dict = field(default_factory=dict)
    right: dict = field(default_factory=dict)


def _rename_term(t: Term, names: dict) -> Term:
    if isinstance(t, Var):
        return t
    return App(names[t.symbol], tuple(_rename_term(a, names) for a in t.args))


def _rename_equation(eq: Equation, names: dict) -> Equation:
    return Equation(_rename_term(eq.lhs, names), _rename_term(eq.rhs, names), eq.var_count)


def coproduct_with_renaming(s: Presentation, t: Presentation):
    """
    記号が衝突したら両側を sym_1 / sym_2 に付け替えて合併する
    戻り値: (Presentation, Renaming)
    """
    clash = set(s.signature.operations) & set(t.signature.operations)
    taken = set(s.signature.operations) | set(t.signature.operations)

    def fresh(symbol, suffix):
        if symbol not in clash:
            return symbol
        name = f"{symbol}_{suffix}"
        while name in taken:
            name += "_"
        taken.add(name)
        return name

    left = {sym: fresh(sym, 1) for sym in s.signature.symbols}
    right = {sym: fresh(sym, 2) for sym in t.signature.symbols}
    ops = {left[sym]: s.signature.arity(sym) for sym in s.signature.symbols}
    ops.update({right[sym]: t.signature.arity(sym) for sym in t.signature.symbols})
    eqs = tuple(_rename_equation(e, left) for e in s.equations) + tuple(
        _rename_equation(e, right) for e in t.equations
    )
    if clash:
        logger.info("記号の衝突を付け替えました: %s", sorted(clash))
    sig = Signature(f"{s.name}_plus_{t.name}", ops)
    return Presentation(sig, eqs), Renaming(left, right)


def coproduct_presentation(s: Presentation, t: Presentation) -> Presentation:
    """S + T: シグネチャと等式の非交和"""
    return coproduct_with_renaming(s, t)[0]


def commuting_tensor_with_renaming(s: Presentation, t: Presentation):
    """S ⊙ T と付け替えの記録"""
    plus, renaming = coproduct_with_renaming(s, t)
    extra = []
    for phi in s.signature.symbols:
        n = s.signature.arity(phi)
        for psi in t.signature.symbols:
            m = t.signature.arity(psi)
            # 生成記号の組ごとに可換性の等式（0 項の組は定数を同一視する）
            extra.append(
                commutation_equation(
                    generator_term(renaming.left[phi], n), n, generator_term(renaming.right[psi], m), m
                )
            )
    sig = Signature(f"{s.name}_tensor_{t.name}", dict(plus.signature.operations))
    return Presentation(sig, plus.equations + tuple(extra)), renaming


def commuting_tensor_presentation(s: Presentation, t: Presentation) -> Presentation:
    """S ⊙ T: S + T に生成記号の全組の可換性の等式を加える"""
    return commuting_tensor_with_renaming(s, t)[0]
