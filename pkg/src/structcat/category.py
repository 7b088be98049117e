# 有限圏: 合成表・恒等射・関手
from src.common.errors import ComposabilityError, InvalidStructureError, ObjectMismatchError

from dataclasses import dataclass, field
from itertools import product
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteCategory:
    """
    objects : 対象の列
    arrows : 射の列（順序が証拠の辞書式順を決める）
    source, target : 射 -> 対象
    identity : 対象 -> 恒等射
    composition : (g, f) -> g∘f（合成可能なすべての組が必要）
    """

    name: str
    objects: tuple
    arrows: tuple
    source: dict = field(default_factory=dict)
    target: dict = field(default_factory=dict)
    identity: dict = field(default_factory=dict)
    composition: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        self._check()

    def _check(self):
        obs = set(self.objects)
        for f in self.arrows:
            if self.source.get(f) not in obs or self.target.get(f) not in obs:
                raise InvalidStructureError(f"{self.name}: 射 {f} の域・余域が対象にありません")
        for a in self.objects:
            i = self.identity.get(a)
            if i is None or self.source[i] != a or self.target[i] != a:
                raise InvalidStructureError(f"{self.name}: {a} の恒等射が不正です")
        for g, f in self.composable_pairs():
            h = self.composition.get((g, f))
            if h is None:
                raise InvalidStructureError(f"{self.name}: 合成 {g}.{f} が表にありません")
            if self.source[h] != self.source[f] or self.target[h] != self.target[g]:
                raise InvalidStructureError(f"{self.name}: 合成 {g}.{f} = {h} の型が合いません")
        for f in self.arrows:
            if self.composition[(f, self.identity[self.source[f]])] != f:
                raise InvalidStructureError(f"{self.name}: 右単位律が {f} で成り立ちません")
            if self.composition[(self.identity[self.target[f]], f)] != f:
                raise InvalidStructureError(f"{self.name}: 左単位律が {f} で成り立ちません")
        for h, g, f in self.composable_triples():
            if self.compose(self.compose(h, g), f) != self.compose(h, self.compose(g, f)):
                raise InvalidStructureError(f"{self.name}: 結合律が ({h}, {g}, {f}) で成り立ちません")

    def composable_pairs(self):
        """(g, f) で target(f) = source(g) のもの"""
        for g, f in product(self.arrows, repeat=2):
            if self.target[f] == self.source[g]:
                yield g, f

    def composable_triples(self):
        for h, g, f in product(self.arrows, repeat=3):
            if self.target[f] == self.source[g] and self.target[g] == self.source[h]:
                yield h, g, f

    def compose(self, g, f):
        if self.target[f] != self.source[g]:
            raise ComposabilityError(f"{self.name}: {g} と {f} は合成できません")
        return self.composition[(g, f)]

    def compose_path(self, *arrows):
        """compose_path(h, g, f) = h∘g∘f"""
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = self.compose(g, out)
        return out

    def hom(self, a, b) -> list:
        return [f for f in self.arrows if self.source[f] == a and self.target[f] == b]

    def is_identity(self, f) -> bool:
        return self.identity[self.source[f]] == f

    def non_identity_arrows(self) -> list:
        return [f for f in self.arrows if not self.is_identity(f)]

    def is_iso(self, f) -> bool:
        return any(
            self.compose(g, f) == self.identity[self.source[f]]
            and self.compose(f, g) == self.identity[self.target[f]]
            for g in self.hom(self.target[f], self.source[f])
        )


@dataclass(frozen=True)
class Functor:
    source: FiniteCategory
    target: FiniteCategory
    on_objects: dict
    on_arrows: dict

    def __call__(self, f):
        return self.on_arrows[f]


def functor_failure(F: Functor):
    """関手でない理由（関手なら None）"""
    A, B = F.source, F.target
    for a in A.objects:
        if F.on_objects.get(a) not in B.objects:
            return f"対象 {a} の像がありません"
        if F.on_arrows.get(A.identity[a]) != B.identity[F.on_objects[a]]:
            return f"恒等射 {A.identity[a]} を保ちません"
    for f in A.arrows:
        img = F.on_arrows.get(f)
        if img not in B.arrows:
            return f"射 {f} の像がありません"
        if B.source[img] != F.on_objects[A.source[f]] or B.target[img] != F.on_objects[A.target[f]]:
            return f"射 {f} の像の型が合いません"
    for g, f in A.composable_pairs():
        if F.on_arrows[A.compose(g, f)] != B.compose(F.on_arrows[g], F.on_arrows[f]):
            return f"合成 {g}.{f} を保ちません"
    return None


def is_functor(F: Functor) -> bool:
    return functor_failure(F) is None


def enumerate_functors(A: FiniteCategory, B: FiniteCategory) -> list:
    """A -> B の関手（対象の像の辞書式順、次に非恒等射の像の順）"""
    out = []
    movers = A.non_identity_arrows()
    for images in product(B.objects, repeat=len(A.objects)):
        on_obj = dict(zip(A.objects, images))
        choices = [B.hom(on_obj[A.source[f]], on_obj[A.target[f]]) for f in movers]
        for picks in product(*choices):
            on_arr = {A.identity[a]: B.identity[on_obj[a]] for a in A.objects}
            on_arr.update(zip(movers, picks))
            F = Functor(A, B, on_obj, on_arr)
            if is_functor(F):
                out.append(F)
    return out


# ---------- 構成 ----------


def category_from_table(name, objects, arrows: dict, composition: dict, identity=None) -> FiniteCategory:
    """
    arrows : 名前 -> (域, 余域)（恒等射を含まなければ id_a を補う）
    composition : (g, f) -> h（恒等射との合成は補う）
    """
    source = {f: s for f, (s, _) in arrows.items()}
    target = {f: t for f, (_, t) in arrows.items()}
    identity = dict(identity or {})
    names = list(arrows)
    for a in objects:
        if a not in identity:
            ident = f"id_{a}"
            identity[a] = ident
            names.append(ident)
            source[ident] = target[ident] = a
    comp = dict(composition)
    for f in names:
        comp.setdefault((f, identity[source[f]]), f)
        comp.setdefault((identity[target[f]], f), f)
    return FiniteCategory(name, tuple(objects), tuple(names), source, target, identity, comp)


def terminal_category() -> FiniteCategory:
    return category_from_table("1", ["*"], {}, {})


def walking_arrow(name="2") -> FiniteCategory:
    """0 -> 1 の射 f を 1 本持つ圏"""
    return category_from_table(name, [0, 1], {"f": (0, 1)}, {})


def composable_pair_category() -> FiniteCategory:
    """a -f-> b -h-> c と合成 hf"""
    return category_from_table(
        "a->b->c",
        ["a", "b", "c"],
        {"f": ("a", "b"), "h": ("b", "c"), "hf": ("a", "c")},
        {("h", "f"): "hf"},
    )


def monoid_category(monoid) -> FiniteCategory:
    """1 対象の圏 ΣM"""
    arrows = {f"m{x}": ("*", "*") for x in range(monoid.k)}
    comp = {(f"m{y}", f"m{x}"): f"m{monoid.mul(y, x)}" for x in range(monoid.k) for y in range(monoid.k)}
    return category_from_table(f"Σ{monoid.name}", ["*"], arrows, comp, {"*": f"m{monoid.unit}"})


def product_category(A: FiniteCategory, B: FiniteCategory) -> FiniteCategory:
    objects = tuple(product(A.objects, B.objects))
    arrows = tuple(product(A.arrows, B.arrows))
    source = {(f, g): (A.source[f], B.source[g]) for f, g in arrows}
    target = {(f, g): (A.target[f], B.target[g]) for f, g in arrows}
    identity = {(a, b): (A.identity[a], B.identity[b]) for a, b in objects}
    comp = {}
    for (f2, g2), (f1, g1) in product(arrows, repeat=2):
        if A.target[f1] == A.source[f2] and B.target[g1] == B.source[g2]:
            comp[((f2, g2), (f1, g1))] = (A.compose(f2, f1), B.compose(g2, g1))
    return FiniteCategory(f"{A.name}x{B.name}", objects, arrows, source, target, identity, comp)


def wide_subcategory(C: FiniteCategory, keep, name: str) -> FiniteCategory:
    """同じ対象で keep の射だけを残す（恒等射を含み合成で閉じている必要がある）"""
    keep = [f for f in C.arrows if f in set(keep)]
    kept = set(keep)
    for a in C.objects:
        if C.identity[a] not in kept:
            raise ObjectMismatchError(f"{name}: 恒等射 {C.identity[a]} が含まれていません")
    comp = {}
    for g, f in C.composable_pairs():
        if g in kept and f in kept:
            h = C.compose(g, f)
            if h not in kept:
                raise InvalidStructureError(f"{name}: {g}.{f} = {h} で閉じていません")
            comp[(g, f)] = h
    return FiniteCategory(
        name,
        C.objects,
        tuple(keep),
        {f: C.source[f] for f in keep},
        {f: C.target[f] for f in keep},
        dict(C.identity),
        comp,
    )
