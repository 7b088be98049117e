# 二変数の関手: sesquifunctor と bifunctor 判定、関手圏 ⟦B,C⟧ / [B,C]
from src.structcat.category import FiniteCategory, Functor, enumerate_functors, functor_failure, product_category
from src.structcat.funny import FunnyTensor
from src.common.errors import ObjectMismatchError
from src.common.settings import DEFAULT_WORD_LEN

from dataclasses import dataclass
from itertools import product
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SesquiFunctor:
    """
    A, B -> C の sesquifunctor
        rows : a -> 関手 T(a, -): B -> C
        cols : b -> 関手 T(-, b): A -> C
    対象上で T(a, -)(b) = T(-, b)(a) が必要
    """

    A: FiniteCategory
    B: FiniteCategory
    C: FiniteCategory
    rows: dict
    cols: dict

    def __post_init__(self):
        for a in self.A.objects:
            if a not in self.rows:
                raise ObjectMismatchError(f"T({a}, -) がありません")
            problem = functor_failure(self.rows[a])
            if problem:
                raise ObjectMismatchError(f"T({a}, -) が関手ではありません: {problem}")
        for b in self.B.objects:
            if b not in self.cols:
                raise ObjectMismatchError(f"T(-, {b}) がありません")
            problem = functor_failure(self.cols[b])
            if problem:
                raise ObjectMismatchError(f"T(-, {b}) が関手ではありません: {problem}")
        for a, b in product(self.A.objects, self.B.objects):
            if self.rows[a].on_objects[b] != self.cols[b].on_objects[a]:
                raise ObjectMismatchError(
                    f"T({a}, -)({b}) = {self.rows[a].on_objects[b]} と T(-, {b})({a}) = {self.cols[b].on_objects[a]} が一致しません"
                )

    def on_objects(self, a, b):
        return self.rows[a].on_objects[b]

    def left(self, f, b):
        """T(f, b)"""
        return self.cols[b](f)

    def right(self, a, g):
        """T(a, g)"""
        return self.rows[a](g)


def square_sides(T: SesquiFunctor, f, g):
    """f: a -> a', g: b -> b' の正方形 (T(a',g)∘T(f,b), T(f,b')∘T(a,g))"""
    a, a2 = T.A.source[f], T.A.target[f]
    b, b2 = T.B.source[g], T.B.target[g]
    one = T.C.compose(T.right(a2, g), T.left(f, b))
    two = T.C.compose(T.left(f, b2), T.right(a, g))
    return one, two


@dataclass(frozen=True)
class BifunctorVerdict:
    """bifunctor でなければ witness は最初に可換でない (f, g)（射の順の辞書式）"""

    is_bifunctor: bool
    witness: tuple | None = None


def bifunctor_check(T: SesquiFunctor) -> BifunctorVerdict:
    for f in T.A.non_identity_arrows():
        for g in T.B.non_identity_arrows():
            one, two = square_sides(T, f, g)
            if one != two:
                return BifunctorVerdict(False, (f, g))
    return BifunctorVerdict(True)


def factor_through_product(T: SesquiFunctor):
    """T(f, g) = T(f, b')∘T(a, g) で A×B -> C を作り、関手になればそれを返す（ならなければ None）"""
    AB = product_category(T.A, T.B)
    on_obj = {(a, b): T.on_objects(a, b) for a, b in AB.objects}
    on_arr = {}
    for f, g in AB.arrows:
        a, b2 = T.A.source[f], T.B.target[g]
        on_arr[(f, g)] = T.C.compose(T.left(f, b2), T.right(a, g))
    F = Functor(AB, T.C, on_obj, on_arr)
    return F if functor_failure(F) is None else None


def restrict_functor(F: Functor, A: FiniteCategory, B: FiniteCategory) -> SesquiFunctor:
    """関手 A×B -> C を sesquifunctor に制限する"""
    C = F.target
    rows, cols = {}, {}
    for a in A.objects:
        rows[a] = Functor(
            B, C, {b: F.on_objects[(a, b)] for b in B.objects}, {g: F((A.identity[a], g)) for g in B.arrows}
        )
    for b in B.objects:
        cols[b] = Functor(
            A, C, {a: F.on_objects[(a, b)] for a in A.objects}, {f: F((f, B.identity[b])) for f in A.arrows}
        )
    return SesquiFunctor(A, B, C, rows, cols)


def universal_sesquifunctor(t: FunnyTensor, max_len: int = DEFAULT_WORD_LEN):
    """V: A, B -> A□B（A□B が有限のときのみ）。(V, A□B の有限圏) を返す"""
    target = t.to_finite_category(max_len)
    A, B = t.A, t.B
    rows, cols = {}, {}
    for a in A.objects:
        on_arr = {g: (t.identity((a, B.source[g])) if B.is_identity(g) else t.right_generator(a, g)) for g in B.arrows}
        rows[a] = Functor(B, target, {b: (a, b) for b in B.objects}, on_arr)
    for b in B.objects:
        on_arr = {f: (t.identity((A.source[f], b)) if A.is_identity(f) else t.left_generator(f, b)) for f in A.arrows}
        cols[b] = Functor(A, target, {a: (a, b) for a in A.objects}, on_arr)
    return SesquiFunctor(A, B, target, rows, cols), target


def compose_after(F: Functor, T: SesquiFunctor) -> SesquiFunctor:
    """F∘T（F: C -> D）"""
    rows = {a: Functor(T.B, F.target, {b: F.on_objects[x] for b, x in T.rows[a].on_objects.items()},
                       {g: F(x) for g, x in T.rows[a].on_arrows.items()}) for a in T.A.objects}
    cols = {b: Functor(T.A, F.target, {a: F.on_objects[x] for a, x in T.cols[b].on_objects.items()},
                       {f: F(x) for f, x in T.cols[b].on_arrows.items()}) for b in T.B.objects}
    return SesquiFunctor(T.A, T.B, F.target, rows, cols)


# ---------- 関手圏 ----------


def _is_natural(B: FiniteCategory, C: FiniteCategory, F: Functor, G: Functor, comps: dict) -> bool:
    for f in B.arrows:
        a, a2 = B.source[f], B.target[f]
        if C.compose(G(f), comps[a]) != C.compose(comps[a2], F(f)):
            return False
    return True


def functor_objects(B: FiniteCategory, C: FiniteCategory) -> dict:
    """関手圏の対象名 F0, F1, ... -> 関手（enumerate_functors の順）"""
    return {f"F{i}": F for i, F in enumerate(enumerate_functors(B, C))}


def functor_hom(B: FiniteCategory, C: FiniteCategory, natural: bool) -> FiniteCategory:
    """
    対象は関手 B -> C（名前は functor_objects と同じ）
    射は (F, G, 成分の組) で、成分は B の対象の順
        natural = False : 任意の族 ⟦B, C⟧
        natural = True  : 自然変換 [B, C]
    合成は成分ごと
    """
    functors = functor_objects(B, C)
    names = list(functors)
    arrows, source, target = [], {}, {}
    for x, y in product(names, repeat=2):
        F, G = functors[x], functors[y]
        choices = [C.hom(F.on_objects[a], G.on_objects[a]) for a in B.objects]
        for picks in product(*choices):
            comps = dict(zip(B.objects, picks))
            if natural and not _is_natural(B, C, F, G, comps):
                continue
            arrow = (x, y, tuple(picks))
            arrows.append(arrow)
            source[arrow], target[arrow] = x, y
    identity = {x: (x, x, tuple(C.identity[functors[x].on_objects[a]] for a in B.objects)) for x in names}
    comp = {}
    for g in arrows:
        for f in arrows:
            if target[f] == source[g]:
                comp[(g, f)] = (source[f], target[g], tuple(C.compose(v, u) for v, u in zip(g[2], f[2])))
    kind = "Nat" if natural else "Fam"
    logger.info("%s[%s,%s]: 対象 %d 個、射 %d 本", kind, B.name, C.name, len(names), len(arrows))
    return FiniteCategory(f"{kind}[{B.name},{C.name}]", tuple(names), tuple(arrows), source, target, identity, comp)


def family_count(B: FiniteCategory, C: FiniteCategory, F: Functor, G: Functor) -> int:
    """F から G への成分の族の数 Π_a |C(Fa, Ga)|"""
    out = 1
    for a in B.objects:
        out *= len(C.hom(F.on_objects[a], G.on_objects[a]))
    return out
