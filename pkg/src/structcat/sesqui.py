# sesquicategory: 2-セルの whiskering と垂直合成、交換律と 2-圏判定
from src.structcat.category import FiniteCategory
from src.common.errors import ComposabilityError, InvalidStructureError
from src.common.report import LawReport

from dataclasses import dataclass, field, replace
from itertools import product
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SesquiData:
    """
    base : 底の有限圏 X
    cells : セル名 -> (f, g)（α: f => g、f と g は平行）
    identity_cell : 射 f -> 1_f
    whisk_left : (h, α) -> hα（α: f => g, h∘f が定義される）
    whisk_right : (α, k) -> αk（f∘k が定義される）
    vcomp : (β, α) -> β∘α（α: f => g, β: g => h）
    """

    name: str
    base: FiniteCategory
    cells: dict = field(default_factory=dict)
    identity_cell: dict = field(default_factory=dict)
    whisk_left: dict = field(default_factory=dict)
    whisk_right: dict = field(default_factory=dict)
    vcomp: dict = field(default_factory=dict)

    def dom(self, cell):
        return self.cells[cell][0]

    def cod(self, cell):
        return self.cells[cell][1]

    def left(self, h, cell):
        return self.whisk_left.get((h, cell))

    def right(self, cell, k):
        return self.whisk_right.get((cell, k))

    def vertical(self, beta, alpha):
        return self.vcomp.get((beta, alpha))

    def left_whiskerable(self):
        """(h, α) で h∘dom(α) が定義されるもの（射の順、次にセルの順）"""
        X = self.base
        for h, cell in product(X.arrows, self.cells):
            if X.source[h] == X.target[self.dom(cell)]:
                yield h, cell

    def right_whiskerable(self):
        X = self.base
        for cell, k in product(self.cells, X.arrows):
            if X.target[k] == X.source[self.dom(cell)]:
                yield cell, k

    def vertically_composable(self):
        for beta, alpha in product(self.cells, repeat=2):
            if self.cod(alpha) == self.dom(beta):
                yield beta, alpha

    def seeded(self, table: str, key, value) -> "SesquiData":
        """表 table の 1 項目だけを書き換えた複製（欠陥の注入用）"""
        entries = dict(getattr(self, table))
        entries[key] = value
        return replace(self, **{table: entries})


def _check(report: LawReport, law: str, ok: bool, witness) -> None:
    report.count(law)
    if not ok:
        report.record(law, witness())


def sesqui_validate(S: SesquiData) -> LawReport:
    """
    法則を網羅的に確認する
        cell_typing / identity_cells / whisker_defined / vcomp_defined /
        whisker_unit / whisker_identity / whisker_assoc / whisker_mixed /
        vcomp_unit / vcomp_assoc / whisker_vcomp
    反例は入力文法（whiskL / whiskR / vcomp）の形で記録する
    """
    X = S.base
    report = LawReport(subject=S.name)
    c = X.compose

    for cell, (f, g) in S.cells.items():
        _check(report, "cell_typing",
               f in X.arrows and g in X.arrows and X.source[f] == X.source[g] and X.target[f] == X.target[g],
               lambda: f"cell {cell} : {f} => {g};")
    if report.failures:
        return report

    for f in X.arrows:
        i = S.identity_cell.get(f)
        _check(report, "identity_cells", i in S.cells and S.cells[i] == (f, f), lambda: f"identity {f}")

    for h, cell in S.left_whiskerable():
        out = S.left(h, cell)
        want = (c(h, S.dom(cell)), c(h, S.cod(cell)))
        _check(report, "whisker_defined", out in S.cells and S.cells[out] == want, lambda: f"whiskL {h}.{cell}")
    for cell, k in S.right_whiskerable():
        out = S.right(cell, k)
        want = (c(S.dom(cell), k), c(S.cod(cell), k))
        _check(report, "whisker_defined", out in S.cells and S.cells[out] == want, lambda: f"whiskR {cell}.{k}")
    for beta, alpha in S.vertically_composable():
        out = S.vertical(beta, alpha)
        want = (S.dom(alpha), S.cod(beta))
        _check(report, "vcomp_defined", out in S.cells and S.cells[out] == want, lambda: f"vcomp {beta}.{alpha}")
    if report.failures:
        logger.warning("%s: 表が不完全です %s", S.name, report.failed_laws())
        return report

    ident = S.identity_cell
    for cell in S.cells:
        f = S.dom(cell)
        b, a = X.target[f], X.source[f]
        _check(report, "whisker_unit", S.left(X.identity[b], cell) == cell, lambda: f"whiskL {X.identity[b]}.{cell}")
        _check(report, "whisker_unit", S.right(cell, X.identity[a]) == cell, lambda: f"whiskR {cell}.{X.identity[a]}")
        _check(report, "vcomp_unit", S.vertical(ident[S.cod(cell)], cell) == cell,
               lambda: f"vcomp {ident[S.cod(cell)]}.{cell}")
        _check(report, "vcomp_unit", S.vertical(cell, ident[f]) == cell, lambda: f"vcomp {cell}.{ident[f]}")

    for h, f in X.composable_pairs():
        _check(report, "whisker_identity", S.left(h, ident[f]) == ident[c(h, f)], lambda: f"whiskL {h}.{ident[f]}")
        _check(report, "whisker_identity", S.right(ident[h], f) == ident[c(h, f)], lambda: f"whiskR {ident[h]}.{f}")

    for h, cell in S.left_whiskerable():
        hc = S.left(h, cell)
        for h2 in X.arrows:
            if X.source[h2] == X.target[h]:
                _check(report, "whisker_assoc", S.left(h2, hc) == S.left(c(h2, h), cell),
                       lambda: f"whiskL {h2}.{hc}")
        for k in X.arrows:
            if X.target[k] == X.source[S.dom(cell)]:
                _check(report, "whisker_mixed", S.right(hc, k) == S.left(h, S.right(cell, k)),
                       lambda: f"whiskR {hc}.{k}")
    for cell, k in S.right_whiskerable():
        ck = S.right(cell, k)
        for k2 in X.arrows:
            if X.target[k2] == X.source[k]:
                _check(report, "whisker_assoc", S.right(ck, k2) == S.right(cell, c(k, k2)),
                       lambda: f"whiskR {ck}.{k2}")

    for beta, alpha in S.vertically_composable():
        ba = S.vertical(beta, alpha)
        for gamma in S.cells:
            if S.dom(gamma) == S.cod(beta):
                _check(report, "vcomp_assoc",
                       S.vertical(gamma, ba) == S.vertical(S.vertical(gamma, beta), alpha),
                       lambda: f"vcomp {gamma}.{ba}")
        tgt, src = X.target[S.dom(alpha)], X.source[S.dom(alpha)]
        for h in X.arrows:
            if X.source[h] == tgt:
                _check(report, "whisker_vcomp",
                       S.left(h, ba) == S.vertical(S.left(h, beta), S.left(h, alpha)),
                       lambda: f"whiskL {h}.{ba}")
            if X.target[h] == src:
                _check(report, "whisker_vcomp",
                       S.right(ba, h) == S.vertical(S.right(beta, h), S.right(alpha, h)),
                       lambda: f"whiskR {ba}.{h}")

    if report.failures:
        logger.warning("%s: 法則違反 %s", S.name, report.failed_laws())
    return report


# ---------- 交換律 ----------


def interchange_sides(S: SesquiData, alpha, beta):
    """
    α: f => g (a -> b), β: h => k (b -> c)
        左辺 = βg ∘ hα
        右辺 = kα ∘ βf
    """
    X = S.base
    f, g = S.cells[alpha]
    h, k = S.cells[beta]
    if X.target[f] != X.source[h]:
        raise ComposabilityError(f"{S.name}: {alpha} と {beta} は水平に合成できません")
    lhs = S.vertical(S.right(beta, g), S.left(h, alpha))
    rhs = S.vertical(S.left(k, alpha), S.right(beta, f))
    return lhs, rhs


def horizontally_composable(S: SesquiData):
    X = S.base
    for alpha, beta in product(S.cells, repeat=2):
        if X.target[S.dom(alpha)] == X.source[S.dom(beta)]:
            yield alpha, beta


def sesqui_interchange(S: SesquiData, pair=None):
    """
    pair = (α, β) なら交換律が成り立つかを返す
    pair = None なら破れる組 (α, β) の一覧（セルの順）を返す
    """
    if pair is not None:
        lhs, rhs = interchange_sides(S, *pair)
        return lhs == rhs
    out = []
    for alpha, beta in horizontally_composable(S):
        lhs, rhs = interchange_sides(S, alpha, beta)
        if lhs != rhs:
            out.append((alpha, beta))
    return out


def is_two_category(S: SesquiData) -> bool:
    return not sesqui_interchange(S)


def sesqui_cospan_commutes(S: SesquiData, X_cells, Y_cells):
    """X の α と Y の β で水平に合成できるすべての組で交換律が成り立つか。(bool, 最初の反例)"""
    base = S.base
    for alpha in X_cells:
        for beta in Y_cells:
            if base.target[S.dom(alpha)] != base.source[S.dom(beta)]:
                continue
            lhs, rhs = interchange_sides(S, alpha, beta)
            if lhs != rhs:
                return False, (alpha, beta)
    return True, None


# ---------- 2-圏 ----------


@dataclass(frozen=True)
class TwoCategory:
    """sesquicategory と水平合成 (α, β) -> β*α"""

    sesqui: SesquiData
    horizontal: dict


def to_two_category(S: SesquiData) -> TwoCategory:
    """β*α = βg ∘ hα で水平合成を定める（交換律が破れていれば InvalidStructureError）"""
    failing = sesqui_interchange(S)
    if failing:
        alpha, beta = failing[0]
        raise InvalidStructureError(f"{S.name}: 交換律が ({alpha}, {beta}) で成り立ちません")
    horizontal = {}
    for alpha, beta in horizontally_composable(S):
        horizontal[(alpha, beta)] = interchange_sides(S, alpha, beta)[0]
    return TwoCategory(S, horizontal)


def validate_two_category(T: TwoCategory) -> LawReport:
    """
    horizontal_unit : 1_{id} * α = α = α * 1_{id}
    horizontal_whisker : 1_h * α = hα、β * 1_f = βf
    horizontal_assoc : (γ*β)*α = γ*(β*α)
    middle_four : (β'∘β)*(α'∘α) = (β'*α')∘(β*α)
    """
    S = T.sesqui
    X = S.base
    hz = T.horizontal
    ident = S.identity_cell
    report = LawReport(subject=f"2cat({S.name})")
    for cell in S.cells:
        a, b = X.source[S.dom(cell)], X.target[S.dom(cell)]
        _check(report, "horizontal_unit", hz[(cell, ident[X.identity[b]])] == cell, lambda: f"{cell} then 1_{b}")
        _check(report, "horizontal_unit", hz[(ident[X.identity[a]], cell)] == cell, lambda: f"1_{a} then {cell}")
    for alpha, beta in horizontally_composable(S):
        f, h = S.dom(alpha), S.dom(beta)
        if beta == ident[h]:
            _check(report, "horizontal_whisker", hz[(alpha, beta)] == S.left(h, alpha), lambda: f"whiskL {h}.{alpha}")
        if alpha == ident[f]:
            _check(report, "horizontal_whisker", hz[(alpha, beta)] == S.right(beta, f), lambda: f"whiskR {beta}.{f}")
        for gamma in S.cells:
            if X.source[S.dom(gamma)] == X.target[h]:
                _check(report, "horizontal_assoc",
                       hz[(hz[(alpha, beta)], gamma)] == hz[(alpha, hz[(beta, gamma)])],
                       lambda: f"({alpha}, {beta}, {gamma})")
    for alpha, alpha2 in ((x, y) for y, x in S.vertically_composable()):
        for beta, beta2 in ((x, y) for y, x in S.vertically_composable()):
            if X.target[S.dom(alpha)] != X.source[S.dom(beta)]:
                continue
            lhs = hz[(S.vertical(alpha2, alpha), S.vertical(beta2, beta))]
            rhs = S.vertical(hz[(alpha2, beta2)], hz[(alpha, beta)])
            _check(report, "middle_four", lhs == rhs, lambda: f"({alpha}, {alpha2}; {beta}, {beta2})")
    return report


# ---------- 組み込みの例 ----------


def discrete_sesqui(C: FiniteCategory) -> SesquiData:
    """恒等 2-セルだけを持つ局所離散な 2-圏"""
    cells = {f"id_{f}": (f, f) for f in C.arrows}
    ident = {f: f"id_{f}" for f in C.arrows}
    wl = {(h, ident[f]): ident[C.compose(h, f)] for h, f in C.composable_pairs()}
    wr = {(ident[h], f): ident[C.compose(h, f)] for h, f in C.composable_pairs()}
    vc = {(ident[f], ident[f]): ident[f] for f in C.arrows}
    return SesquiData(f"disc({C.name})", C, cells, ident, wl, wr, vc)


def monoid_labelled_sesqui(C: FiniteCategory, monoid) -> SesquiData:
    """
    各射 f に自己 2-セル f_m（m は M の元）を置く
    whiskering はラベルを保ち、垂直合成は (f_y)∘(f_x) = f_(y·x)
    交換律は M が可換のときに限り成り立つ
    """
    k = monoid.k

    def cell(f, m):
        return f"{f}_{m}"

    cells = {cell(f, m): (f, f) for f in C.arrows for m in range(k)}
    ident = {f: cell(f, monoid.unit) for f in C.arrows}
    wl, wr = {}, {}
    for h, f in C.composable_pairs():
        for m in range(k):
            wl[(h, cell(f, m))] = cell(C.compose(h, f), m)
            wr[(cell(h, m), f)] = cell(C.compose(h, f), m)
    vc = {(cell(f, y), cell(f, x)): cell(f, monoid.mul(y, x)) for f in C.arrows for x in range(k) for y in range(k)}
    return SesquiData(f"{monoid.name}-cells({C.name})", C, cells, ident, wl, wr, vc)
