# オペラドの生成元と関係による表示、Boardman–Vogt テンソル、代数の列挙
from src.algebra.model import FiniteModel, enumerate_models, is_commuting_pair
from src.algebra.term import App, Equation, Presentation, Signature, Var
from src.common.errors import ArityError, InputError
from src.common.finmap import FinMap, transpose
from src.common.settings import MODEL_CEILING

from dataclasses import dataclass, field
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Leaf:
    """葉（0 始まりの入力番号）"""

    index: int


@dataclass(frozen=True)
class Node:
    generator: str
    children: tuple = ()


def leaves(tree) -> list:
    if isinstance(tree, Leaf):
        return [tree.index]
    out = []
    for c in tree.children:
        out.extend(leaves(c))
    return out


def relabel(tree, perm: FinMap):
    """葉 i を perm(i) に付け替える（tree·perm）"""
    if isinstance(tree, Leaf):
        return Leaf(perm(tree.index))
    return Node(tree.generator, tuple(relabel(c, perm) for c in tree.children))


def tree_str(tree) -> str:
    if isinstance(tree, Leaf):
        return str(tree.index + 1)
    return f"{tree.generator}({','.join(tree_str(c) for c in tree.children)})"


@dataclass(frozen=True)
class Relation:
    """lhs = rhs·perm（perm が None なら恒等）"""

    lhs: object
    rhs: object
    arity: int
    perm: FinMap = None

    def rhs_tree(self):
        return self.rhs if self.perm is None else relabel(self.rhs, self.perm)

    def __str__(self):
        tail = ""
        if self.perm is not None:
            tail = " . perm(" + ",".join(str(v + 1) for v in self.perm.values) + ")"
        return f"{tree_str(self.lhs)} = {tree_str(self.rhs)}{tail}"


@dataclass(frozen=True)
class OperadPresentation:
    """
    name : 表示名
    generators : 生成元 -> アリティ
    relations : Relation の列（各辺の葉は 0..arity-1 の置換）
    """

    name: str
    generators: dict = field(default_factory=dict)
    relations: tuple = ()

    def __post_init__(self):
        for rel in self.relations:
            for side in (rel.lhs, rel.rhs_tree()):
                _check_tree(side, self.generators)
                if sorted(leaves(side)) != list(range(rel.arity)):
                    raise InputError(f"{self.name}: 関係 {rel} の葉が 1..{rel.arity} の置換ではありません")


def _check_tree(tree, generators: dict):
    if isinstance(tree, Leaf):
        return
    if tree.generator not in generators:
        raise InputError(f"宣言されていない生成元です: {tree.generator}")
    if generators[tree.generator] != len(tree.children):
        raise InputError(f"{tree.generator} のアリティは {generators[tree.generator]} です")
    for c in tree.children:
        _check_tree(c, generators)


def tree_to_term(tree):
    """葉 i を変数 x_{i+1} とする線形な項"""
    if isinstance(tree, Leaf):
        return Var(tree.index + 1)
    return App(tree.generator, tuple(tree_to_term(c) for c in tree.children))


def to_presentation(p: OperadPresentation) -> Presentation:
    """集合上のオペラド代数は線形な等式の理論のモデルと同じ"""
    eqs = tuple(Equation(tree_to_term(r.lhs), tree_to_term(r.rhs_tree()), r.arity) for r in p.relations)
    return Presentation(Signature(p.name, dict(p.generators)), eqs)


def _rename(tree, names):
    if isinstance(tree, Leaf):
        return tree
    return Node(names[tree.generator], tuple(_rename(c, names) for c in tree.children))


def bv_tensor_presentation(p1: OperadPresentation, p2: OperadPresentation) -> OperadPresentation:
    """
    オペラドの余積に、生成元の組 (ψ: n, φ: m) ごとの関係
        ψ(φ, ..., φ) = φ(ψ, ..., ψ)·σ
    を加える（σ は転置 j·n+i -> i·m+j）
    """
    clash = set(p1.generators) & set(p2.generators)
    left = {g: (f"{g}_1" if g in clash else g) for g in p1.generators}
    right = {g: (f"{g}_2" if g in clash else g) for g in p2.generators}
    gens = {left[g]: a for g, a in p1.generators.items()}
    gens.update({right[g]: a for g, a in p2.generators.items()})
    rels = [Relation(_rename(r.lhs, left), _rename(r.rhs, left), r.arity, r.perm) for r in p1.relations]
    rels += [Relation(_rename(r.lhs, right), _rename(r.rhs, right), r.arity, r.perm) for r in p2.relations]
    for psi, n in p1.generators.items():
        for phi, m in p2.generators.items():
            lhs = Node(
                left[psi],
                tuple(Node(right[phi], tuple(Leaf(i * m + j) for j in range(m))) for i in range(n)),
            )
            raw = Node(
                right[phi],
                tuple(Node(left[psi], tuple(Leaf(j * n + i) for i in range(n))) for j in range(m)),
            )
            rels.append(Relation(lhs, raw, n * m, transpose(n, m)))
    return OperadPresentation(f"{p1.name}_bv_{p2.name}", gens, tuple(rels))


@dataclass(frozen=True)
class OperadAlgebra:
    """carrier {0..k-1} 上のオペラド代数（生成元ごとの演算表）"""

    presentation: OperadPresentation
    model: FiniteModel

    @property
    def k(self) -> int:
        return self.model.k

    def table(self, generator: str) -> tuple:
        return self.model.table(generator)


def enumerate_operad_algebras(p: OperadPresentation, k: int, ceiling: int = MODEL_CEILING) -> list:
    if k < 0:
        raise ArityError("carrier のサイズは 0 以上です")
    pres = to_presentation(p)
    return [OperadAlgebra(p, m) for m in enumerate_models(pres, k, ceiling)]


def interchanging_algebra_pairs(p1: OperadPresentation, p2: OperadPresentation, k: int,
                                ceiling: int = MODEL_CEILING) -> list:
    """同じ carrier 上の P1-代数と P2-代数の組で、BV の関係が点ごとに成り立つもの"""
    pairs = []
    for a in enumerate_operad_algebras(p1, k, ceiling):
        for b in enumerate_operad_algebras(p2, k, ceiling):
            if is_commuting_pair(a.model, b.model):
                pairs.append((a, b))
    logger.info("%s, %s: k=%d で交換する組 %d 個", p1.name, p2.name, k, len(pairs))
    return pairs


# ---------- 組み込みの表示 ----------


def _m(a, b):
    return Node("m", (a, b))


def ass_presentation(unital: bool = False) -> OperadPresentation:
    x, y, z = Leaf(0), Leaf(1), Leaf(2)
    gens = {"m": 2}
    rels = [Relation(_m(_m(x, y), z), _m(x, _m(y, z)), 3)]
    if unital:
        gens["e"] = 0
        e = Node("e")
        rels += [Relation(_m(e, x), x, 1), Relation(_m(x, e), x, 1)]
    return OperadPresentation("Ass_unital" if unital else "Ass", gens, tuple(rels))


def com_presentation(unital: bool = True) -> OperadPresentation:
    base = ass_presentation(unital)
    x, y = Leaf(0), Leaf(1)
    swap = Relation(_m(x, y), _m(x, y), 2, FinMap(2, 2, (1, 0)))
    return OperadPresentation("Com_unital" if unital else "Com", base.generators, base.relations + (swap,))


def trivial_presentation() -> OperadPresentation:
    return OperadPresentation("I", {}, ())
