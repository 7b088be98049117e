# premonoidal 圏: 部分テンソル・制約・中心、Freyd 圏の検証
from src.structcat.category import FiniteCategory, Functor, functor_failure, wide_subcategory
from src.common.errors import InvalidStructureError, ObjectMismatchError
from src.common.report import LawReport

from dataclasses import dataclass, field, replace
from itertools import product
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PremonoidalData:
    """
    base : 底の有限圏 M
    unit : 単位対象 i
    tensor_obj : (a, b) -> a⊗b
    left_tensor : (a, f) -> a⊗f（f: b -> b' に対し a⊗b -> a⊗b'）
    right_tensor : (f, b) -> f⊗b
    lam : a -> λ_a: i⊗a -> a
    rho : a -> ρ_a: a⊗i -> a
    alpha : (a, b, c) -> α_abc: (a⊗b)⊗c -> a⊗(b⊗c)
    """

    name: str
    base: FiniteCategory
    unit: object
    tensor_obj: dict = field(default_factory=dict)
    left_tensor: dict = field(default_factory=dict)
    right_tensor: dict = field(default_factory=dict)
    lam: dict = field(default_factory=dict)
    rho: dict = field(default_factory=dict)
    alpha: dict = field(default_factory=dict)

    def t(self, a, b):
        return self.tensor_obj[(a, b)]

    def lt(self, a, f):
        """a⊗f"""
        return self.left_tensor[(a, f)]

    def rt(self, f, b):
        """f⊗b"""
        return self.right_tensor[(f, b)]

    def seeded(self, table: str, key, value) -> "PremonoidalData":
        entries = dict(getattr(self, table))
        entries[key] = value
        return replace(self, **{table: entries})


def _check(report: LawReport, law: str, ok: bool, witness) -> None:
    report.count(law)
    if not ok:
        report.record(law, witness())


def square_sides(P: PremonoidalData, x, y):
    """
    x: a -> b, y: c -> d
        左辺 = (b⊗y)∘(x⊗c)
        右辺 = (x⊗d)∘(a⊗y)
    """
    M = P.base
    a, b = M.source[x], M.target[x]
    c, d = M.source[y], M.target[y]
    lhs = M.compose(P.lt(b, y), P.rt(x, c))
    rhs = M.compose(P.rt(x, d), P.lt(a, y))
    return lhs, rhs


def central_witness(P: PremonoidalData, f):
    """f を中心でなくする最初の g（2 つの正方形のどちらか）。中心なら None"""
    for g in P.base.arrows:
        one = square_sides(P, f, g)
        two = square_sides(P, g, f)
        if one[0] != one[1] or two[0] != two[1]:
            return g
    return None


def is_central(P: PremonoidalData, f) -> bool:
    return central_witness(P, f) is None


def central_arrows(P: PremonoidalData) -> list:
    return [f for f in P.base.arrows if is_central(P, f)]


def is_posetal(C: FiniteCategory) -> bool:
    return all(len(C.hom(a, b)) <= 1 for a, b in product(C.objects, repeat=2))


def _typing(P: PremonoidalData, report: LawReport) -> None:
    M = P.base
    obs = set(M.objects)
    for a, b in product(M.objects, repeat=2):
        _check(report, "tensor_typing", P.tensor_obj.get((a, b)) in obs, lambda: f"tensor {a} {b}")
    if report.failures:
        return
    for a, f in product(M.objects, M.arrows):
        g = P.left_tensor.get((a, f))
        want = (P.t(a, M.source[f]), P.t(a, M.target[f]))
        _check(report, "tensor_typing", g in M.arrows and (M.source[g], M.target[g]) == want,
               lambda: f"ltensor {a}.{f}")
        g = P.right_tensor.get((f, a))
        want = (P.t(M.source[f], a), P.t(M.target[f], a))
        _check(report, "tensor_typing", g in M.arrows and (M.source[g], M.target[g]) == want,
               lambda: f"rtensor {f}.{a}")
    i = P.unit
    for a in M.objects:
        g = P.lam.get(a)
        _check(report, "tensor_typing", g in M.arrows and (M.source[g], M.target[g]) == (P.t(i, a), a),
               lambda: f"lambda {a}")
        g = P.rho.get(a)
        _check(report, "tensor_typing", g in M.arrows and (M.source[g], M.target[g]) == (P.t(a, i), a),
               lambda: f"rho {a}")
    for a, b, c in product(M.objects, repeat=3):
        g = P.alpha.get((a, b, c))
        want = (P.t(P.t(a, b), c), P.t(a, P.t(b, c)))
        _check(report, "tensor_typing", g in M.arrows and (M.source[g], M.target[g]) == want,
               lambda: f"alpha {a} {b} {c}")


def premonoidal_validate(P: PremonoidalData) -> LawReport:
    """
    法則を網羅的に確認する
        tensor_typing / functoriality / naturality / triangle / pentagon /
        constraint_iso / constraint_central
    中心でない射は notes に記録する（法則違反ではない）
    """
    M = P.base
    c = M.compose
    report = LawReport(subject=P.name)
    _typing(P, report)
    if report.failures:
        logger.warning("%s: 表が不完全です", P.name)
        return report

    for a in M.objects:
        for b in M.objects:
            idb = M.identity[b]
            _check(report, "functoriality", P.lt(a, idb) == M.identity[P.t(a, b)], lambda: f"ltensor {a}.{idb}")
            _check(report, "functoriality", P.rt(idb, a) == M.identity[P.t(b, a)], lambda: f"rtensor {idb}.{a}")
        for g, f in M.composable_pairs():
            _check(report, "functoriality", P.lt(a, c(g, f)) == c(P.lt(a, g), P.lt(a, f)),
                   lambda: f"ltensor {a}.{M.compose(g, f)}")
            _check(report, "functoriality", P.rt(c(g, f), a) == c(P.rt(g, a), P.rt(f, a)),
                   lambda: f"rtensor {M.compose(g, f)}.{a}")

    i = P.unit
    for f in M.arrows:
        a, b = M.source[f], M.target[f]
        _check(report, "naturality", c(f, P.lam[a]) == c(P.lam[b], P.lt(i, f)), lambda: f"lambda at {f}")
        _check(report, "naturality", c(f, P.rho[a]) == c(P.rho[b], P.rt(f, i)), lambda: f"rho at {f}")
        for x, y in product(M.objects, repeat=2):
            # 第 1・第 2・第 3 変数での α の自然性
            one = c(P.alpha[(b, x, y)], P.rt(P.rt(f, x), y)) == c(P.rt(f, P.t(x, y)), P.alpha[(a, x, y)])
            two = c(P.alpha[(x, b, y)], P.rt(P.lt(x, f), y)) == c(P.lt(x, P.rt(f, y)), P.alpha[(x, a, y)])
            three = c(P.alpha[(x, y, b)], P.lt(P.t(x, y), f)) == c(P.lt(x, P.lt(y, f)), P.alpha[(x, y, a)])
            _check(report, "naturality", one and two and three, lambda: f"alpha at {f} with {x} {y}")

    for a, b in product(M.objects, repeat=2):
        _check(report, "triangle",
               c(P.lt(a, P.lam[b]), P.alpha[(a, i, b)]) == P.rt(P.rho[a], b),
               lambda: f"triangle {a} {b}")
    for a, b, x, d in product(M.objects, repeat=4):
        lhs = c(P.alpha[(a, b, P.t(x, d))], P.alpha[(P.t(a, b), x, d)])
        rhs = M.compose_path(P.lt(a, P.alpha[(b, x, d)]), P.alpha[(a, P.t(b, x), d)], P.rt(P.alpha[(a, b, x)], d))
        _check(report, "pentagon", lhs == rhs, lambda: f"pentagon {a} {b} {x} {d}")

    constraints = [P.lam[a] for a in M.objects] + [P.rho[a] for a in M.objects]
    constraints += [P.alpha[k] for k in product(M.objects, repeat=3)]
    for g in dict.fromkeys(constraints):
        _check(report, "constraint_iso", M.is_iso(g), lambda: f"constraint {g}")
        _check(report, "constraint_central", is_central(P, g), lambda: f"constraint {g} vs {central_witness(P, g)}")

    if is_posetal(M):
        report.notes.append("posetal: every arrow is central")
    else:
        for f in M.arrows:
            g = central_witness(P, f)
            if g is not None:
                report.notes.append(f"non-central: {f} (against {g})")
    if report.failures:
        logger.warning("%s: 法則違反 %s", P.name, report.failed_laws())
    return report


# ---------- 中心 ----------


@dataclass(frozen=True)
class PremonoidalCentre:
    """中心 Z(P): 中心射だけの wide 部分圏と、それが monoidal であることの確認"""

    category: FiniteCategory
    structure: PremonoidalData
    report: LawReport


def restrict(P: PremonoidalData, C: FiniteCategory) -> PremonoidalData:
    """P のテンソルを同じ対象の wide 部分圏 C に制限する"""
    kept = set(C.arrows)
    return replace(
        P,
        name=C.name,
        base=C,
        left_tensor={k: v for k, v in P.left_tensor.items() if k[1] in kept},
        right_tensor={k: v for k, v in P.right_tensor.items() if k[0] in kept},
    )


def premonoidal_centre(P: PremonoidalData) -> PremonoidalCentre:
    """中心射の wide 部分圏（合成とテンソルで閉じていること、monoidal であることを確認する）"""
    upstream = premonoidal_validate(P)
    if not upstream.ok:
        raise InvalidStructureError(f"{P.name}: premonoidal ではありません {upstream.failed_laws()}")
    M = P.base
    central = central_arrows(P)
    C = wide_subcategory(M, central, f"Z({P.name})")
    keep = set(central)
    for a, f in product(M.objects, central):
        if P.lt(a, f) not in keep or P.rt(f, a) not in keep:
            raise InvalidStructureError(f"Z({P.name}): {a} と {f} のテンソルが中心にありません")
    Z = restrict(P, C)
    report = premonoidal_validate(Z)
    verdict = freyd_cospan_commutes(Z, C.arrows, C.arrows)
    report.count("monoidal")
    if not verdict.commutes:
        x, y = verdict.witness
        report.record("monoidal", f"{x} vs {y}")
    logger.info("%s: 中心は %d / %d 本", P.name, len(central), len(M.arrows))
    return PremonoidalCentre(C, Z, report)


@dataclass(frozen=True)
class CospanVerdict:
    commutes: bool
    witness: tuple | None = None


def freyd_cospan_commutes(M: PremonoidalData, X, Y) -> CospanVerdict:
    """X の x と Y の y すべてで (b⊗y)∘(x⊗c) = (x⊗d)∘(a⊗y)。破れたら最初の反例 (x, y)"""
    for x in X:
        for y in Y:
            lhs, rhs = square_sides(M, x, y)
            if lhs != rhs:
                return CospanVerdict(False, (x, y))
    return CospanVerdict(True)


def centre_maximality_witnesses(P: PremonoidalData) -> dict:
    """中心でない射 f ごとに、f を加えると破れる正方形 (x, y)"""
    out = {}
    for f in P.base.arrows:
        g = central_witness(P, f)
        if g is None:
            continue
        lhs, rhs = square_sides(P, f, g)
        out[f] = (f, g) if lhs != rhs else (g, f)
    return out


# ---------- Freyd 圏 ----------


def freyd_validate(A: PremonoidalData, M: PremonoidalData, F: Functor) -> LawReport:
    """
    F: A -> M が対象上で全単射な strict premonoidal 関手で、A の射を M の中心射に送るか
        source_monoidal / functor / unit / tensor / constraints / central
    """
    src, tgt = A.base, M.base
    images = [F.on_objects.get(a) for a in src.objects]
    if set(images) != set(tgt.objects) or len(set(images)) != len(images):
        raise ObjectMismatchError(f"{A.name} -> {M.name}: 対象上で全単射ではありません")
    report = LawReport(subject=f"{A.name} -> {M.name}")

    upstream = premonoidal_validate(A)
    report.count("source_monoidal")
    if not upstream.ok:
        report.record("source_monoidal", ", ".join(upstream.failed_laws()))
    else:
        g = next((f for f in src.arrows if not is_central(A, f)), None)
        if g is not None:
            report.record("source_monoidal", f"non-central {g}")
    problem = functor_failure(F)
    report.count("functor")
    if problem:
        report.record("functor", problem)
        return report

    Fo = F.on_objects
    _check(report, "unit", Fo[A.unit] == M.unit, lambda: f"unit {A.unit}")
    for a, b in product(src.objects, repeat=2):
        _check(report, "tensor", Fo[A.t(a, b)] == M.t(Fo[a], Fo[b]), lambda: f"tensor {a} {b}")
    for a, f in product(src.objects, src.arrows):
        _check(report, "tensor", F(A.lt(a, f)) == M.lt(Fo[a], F(f)), lambda: f"ltensor {a}.{f}")
        _check(report, "tensor", F(A.rt(f, a)) == M.rt(F(f), Fo[a]), lambda: f"rtensor {f}.{a}")
    for a in src.objects:
        _check(report, "constraints", F(A.lam[a]) == M.lam[Fo[a]], lambda: f"lambda {a}")
        _check(report, "constraints", F(A.rho[a]) == M.rho[Fo[a]], lambda: f"rho {a}")
    for a, b, c in product(src.objects, repeat=3):
        _check(report, "constraints", F(A.alpha[(a, b, c)]) == M.alpha[(Fo[a], Fo[b], Fo[c])],
               lambda: f"alpha {a} {b} {c}")
    for f in src.arrows:
        _check(report, "central", is_central(M, F(f)), lambda: f"{f} -> {F(f)} vs {central_witness(M, F(f))}")
    if report.failures:
        logger.warning("%s: Freyd 圏の条件違反 %s", report.subject, report.failed_laws())
    return report


def centre_inclusion(P: PremonoidalData):
    """(中心の構造, 包含関手)"""
    Z = premonoidal_centre(P)
    C = Z.category
    F = Functor(C, P.base, {a: a for a in C.objects}, {f: f for f in C.arrows})
    return Z.structure, F


# ---------- writer 効果の例 ----------


def _writer_arrow(w: int, a) -> str:
    return f"w{w}_{a}"


def writer_premonoidal(monoid, n: int, name=None) -> PremonoidalData:
    """
    対象 Z/n（a⊗b = a+b mod n、単位 0）、射は自己射 w_a（w は M の元）
    合成は記録の連結 (w'_a)∘(w_a) = (w·w')_a、テンソルは記録を保つ
    制約はすべて恒等射。M が可換なら monoidal、そうでなければ w_a は w が M の中心にあるときに限り中心
    """
    objects = list(range(n))
    arrows, source, target, comp = [], {}, {}, {}
    for a in objects:
        for w in range(monoid.k):
            f = _writer_arrow(w, a)
            arrows.append(f)
            source[f] = target[f] = a
        for w, v in product(range(monoid.k), repeat=2):
            comp[(_writer_arrow(v, a), _writer_arrow(w, a))] = _writer_arrow(monoid.mul(w, v), a)
    identity = {a: _writer_arrow(monoid.unit, a) for a in objects}
    base = FiniteCategory(f"Writer({monoid.name},Z{n})", objects, arrows, source, target, identity, comp)
    tensor_obj = {(a, b): (a + b) % n for a, b in product(objects, repeat=2)}
    lt, rt = {}, {}
    for a, b in product(objects, repeat=2):
        for w in range(monoid.k):
            lt[(a, _writer_arrow(w, b))] = _writer_arrow(w, (a + b) % n)
            rt[(_writer_arrow(w, b), a)] = _writer_arrow(w, (a + b) % n)
    lam = {a: identity[a] for a in objects}
    alpha = {(a, b, c): identity[(a + b + c) % n] for a, b, c in product(objects, repeat=3)}
    return PremonoidalData(name or base.name, base, 0, tensor_obj, lt, rt, lam, dict(lam), alpha)


def writer_functor(A: PremonoidalData, M: PremonoidalData, hom) -> Functor:
    """記録のモノイド準同型 hom から w_a -> hom(w)_a で関手を作る"""
    on_arr = {}
    for f in A.base.arrows:
        w, a = f[1:].split("_")
        on_arr[f] = _writer_arrow(hom(int(w)), int(a))
    return Functor(A.base, M.base, {a: a for a in A.base.objects}, on_arr)
