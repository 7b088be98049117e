# 意味論の層: クローンの切り詰め T(0..N)、有限代数のクローン、可換性の 2 つの判定
from src.algebra.term import Signature
from src.common.errors import (
    ArityError,
    BoundExceededError,
    CeilingExceededError,
    ClosureError,
)
from src.common.finmap import (
    FinMap,
    all_maps,
    column_injection,
    identity,
    row_injection,
)
from src.common.report import LawReport, Report
from src.common.settings import CLONE_CEILING, VALIDATE_ARITY, VALIDATE_CASES
from src.common.tables import all_tuples, check_table, encode, functions_commute

from dataclasses import dataclass, field
from itertools import product
from typing import Callable
import logging
import numpy as np

logger = logging.getLogger(__name__)


class CloneTruncation:
    """
    アリティ N までに切り詰めた代数的理論
        T(n) の要素は 0..size(n)-1 の id（挿入順）
        act(u, f) : FinMap u: n -> m による付け替え T(u)
        unit(i, n) : 射影 π_i ∈ T(n)
        subst(f, n, gs, m) : μ(f; g_1..g_n)
    """

    name = "clone"
    bound = 0

    def size(self, n: int) -> int:
        raise NotImplementedError

    def elements(self, n: int) -> range:
        return range(self.size(n))

    def act(self, u: FinMap, f: int) -> int:
        raise NotImplementedError

    def unit(self, i: int, n: int) -> int:
        raise NotImplementedError

    def subst(self, f: int, n: int, gs, m: int) -> int:
        raise NotImplementedError

    def describe(self, f: int, n: int) -> str:
        return f"#{f}/{n}"

    def check_arity(self, n: int) -> None:
        if not 0 <= n <= self.bound:
            raise BoundExceededError(f"{self.name}: アリティ {n} は切り詰めの外です", self.bound, n)


@dataclass(frozen=True)
class FiniteAlgebra:
    """
    carrier {0..k-1} と演算表の組
        tables : 記号 -> 行優先の表（長さ k^n）
    """

    name: str
    k: int
    signature: Signature
    tables: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 1:
            raise ArityError("代数の carrier は 1 要素以上です")
        if set(self.tables) != set(self.signature.operations):
            raise ArityError(f"{self.name}: 演算表がシグネチャと一致しません")
        fixed = {
            s: check_table(self.tables[s], self.k, self.signature.arity(s), s)
            for s in self.signature.symbols
        }
        object.__setattr__(self, "tables", fixed)


class AlgebraClone(CloneTruncation):
    """
    関数表で要素を表すクローン（有限代数のクローン・中心化クローン）
        tables : アリティ n -> 表の一覧（挿入順）
        labels : アリティ n -> 表示用の名前
    """

    def __init__(self, name: str, k: int, bound: int, tables: dict, labels: dict):
        self.name = name
        self.k = k
        self.bound = bound
        self._tables = {}
        self._index = {}
        self._labels = {}
        self._xs = {}
        for n in range(bound + 1):
            rows = [tuple(int(v) for v in t) for t in tables.get(n, [])]
            self._tables[n] = np.array(rows, dtype=np.int64).reshape(len(rows), k**n)
            self._index[n] = {row: i for i, row in enumerate(rows)}
            self._labels[n] = list(labels.get(n, [str(list(r)) for r in rows]))

    def size(self, n: int) -> int:
        self.check_arity(n)
        return self._tables[n].shape[0]

    def table(self, f: int, n: int) -> tuple:
        return tuple(int(v) for v in self._tables[n][f])

    def index_of(self, table, n: int):
        """表に対応する要素 id（なければ None）"""
        self.check_arity(n)
        return self._index[n].get(tuple(int(v) for v in table))

    def _tuples(self, m: int) -> np.ndarray:
        if m not in self._xs:
            self._xs[m] = all_tuples(self.k, m)
        return self._xs[m]

    def _lookup(self, row: np.ndarray, m: int) -> int:
        key = tuple(int(v) for v in row)
        found = self._index[m].get(key)
        if found is None:
            raise ClosureError(f"{self.name}: 表 {list(key)} は T({m}) にありません")
        return found

    def act(self, u: FinMap, f: int) -> int:
        self.check_arity(u.domain)
        self.check_arity(u.codomain)
        cols = self._tuples(u.codomain)[:, list(u.values)]
        return self._lookup(self._tables[u.domain][f][encode(cols, self.k)], u.codomain)

    def unit(self, i: int, n: int) -> int:
        self.check_arity(n)
        if not 0 <= i < n:
            raise ArityError(f"射影 π_{i + 1} は T({n}) にありません")
        return self._lookup(self._tuples(n)[:, i], n)

    def subst(self, f: int, n: int, gs, m: int) -> int:
        self.check_arity(n)
        self.check_arity(m)
        gs = list(gs)
        if len(gs) != n:
            raise ArityError(f"代入の引数の数が一致しません: {len(gs)} != {n}")
        cols = self._tables[m][gs].T
        return self._lookup(self._tables[n][f][encode(cols, self.k)], m)

    def describe(self, f: int, n: int) -> str:
        values = ",".join(str(v) for v in self.table(f, n))
        label = self._labels[n][f]
        return f"{label} = [{values}]/{n}" if not label.startswith("[") else f"[{values}]/{n}"


class TabulatedClone(CloneTruncation):
    """
    作用・単位・代入をすべて表で持つクローン（ファイル入力や欠陥の埋め込み用）
        sizes : n -> |T(n)|
        actions : (u.domain, u.codomain, u.values) -> 要素ごとの像
        units : n -> (π_1, ..., π_n)
        substs : (n, m) -> {(f, gs): 結果}
    """

    def __init__(self, name, bound, sizes, actions, units, substs, labels=None):
        self.name = name
        self.bound = bound
        self.sizes = dict(sizes)
        self.actions = dict(actions)
        self.units = dict(units)
        self.substs = {key: dict(rows) for key, rows in substs.items()}
        self.labels = labels or {}

    @classmethod
    def from_clone(cls, c: CloneTruncation, bound=None):
        """任意のクローンを表にする（bound までのすべての作用と代入）"""
        bound = c.bound if bound is None else bound
        sizes = {n: c.size(n) for n in range(bound + 1)}
        actions = {}
        for n in range(bound + 1):
            for m in range(bound + 1):
                for u in all_maps(n, m):
                    actions[(n, m, u.values)] = tuple(c.act(u, f) for f in range(sizes[n]))
        units = {n: tuple(c.unit(i, n) for i in range(n)) for n in range(bound + 1)}
        substs = {}
        for n in range(bound + 1):
            for m in range(bound + 1):
                rows = {}
                for f in range(sizes[n]):
                    for gs in product(range(sizes[m]), repeat=n):
                        try:
                            rows[(f, gs)] = c.subst(f, n, gs, m)
                        except BoundExceededError:
                            continue
                substs[(n, m)] = rows
        labels = {n: [c.describe(f, n) for f in range(sizes[n])] for n in range(bound + 1)}
        return cls(c.name, bound, sizes, actions, units, substs, labels)

    def with_subst(self, n, m, f, gs, value):
        """代入表の 1 か所を書き換えた複製"""
        substs = {key: dict(rows) for key, rows in self.substs.items()}
        substs[(n, m)][(f, tuple(gs))] = value
        return TabulatedClone(
            self.name, self.bound, self.sizes, self.actions, self.units, substs, self.labels
        )

    def with_action(self, u: FinMap, f, value):
        """作用表の 1 か所を書き換えた複製"""
        actions = dict(self.actions)
        row = list(actions[(u.domain, u.codomain, u.values)])
        row[f] = value
        actions[(u.domain, u.codomain, u.values)] = tuple(row)
        return TabulatedClone(
            self.name, self.bound, self.sizes, actions, self.units, self.substs, self.labels
        )

    def size(self, n):
        self.check_arity(n)
        return self.sizes[n]

    def act(self, u, f):
        self.check_arity(u.domain)
        self.check_arity(u.codomain)
        return self.actions[(u.domain, u.codomain, tuple(u.values))][f]

    def unit(self, i, n):
        self.check_arity(n)
        return self.units[n][i]

    def subst(self, f, n, gs, m):
        self.check_arity(n)
        self.check_arity(m)
        key = (f, tuple(gs))
        rows = self.substs.get((n, m), {})
        if key not in rows:
            raise BoundExceededError(f"{self.name}: μ が定義されていません", self.bound, m)
        return rows[key]

    def describe(self, f, n):
        names = self.labels.get(n)
        return names[f] if names else super().describe(f, n)


# ---------- 有限代数のクローン ----------


def _closure(alg: FiniteAlgebra, n: int, ceiling: int):
    """射影から生成記号（ファイル順）で合成を閉じる。合成の深さごとに層をなす"""
    k = alg.k
    xs = all_tuples(k, n)
    tables = [xs[:, i] for i in range(n)]
    labels = [f"x{i + 1}" for i in range(n)]
    index = {tuple(int(v) for v in t): i for i, t in enumerate(tables)}
    gens = [
        (s, alg.signature.arity(s), np.asarray(alg.tables[s], dtype=np.int64))
        for s in alg.signature.symbols
    ]
    start, first = 0, True
    while True:
        end = len(tables)
        if start == end and not first:
            break
        for symbol, a, f_arr in gens:
            if a == 0:
                candidates = [()] if first else []
            else:
                candidates = (t for t in product(range(end), repeat=a) if max(t) >= start)
            for args in candidates:
                if a == 0:
                    cols = np.zeros((k**n, 0), dtype=np.int64)
                else:
                    cols = np.stack([tables[i] for i in args], axis=1)
                new = f_arr[encode(cols, k)]
                key = tuple(int(v) for v in new)
                if key in index:
                    continue
                if len(tables) >= ceiling:
                    raise CeilingExceededError(
                        f"{alg.name}: T({n}) の閉包が上限を超えました", ceiling, len(tables)
                    )
                index[key] = len(tables)
                tables.append(new)
                labels.append(f"{symbol}({','.join(labels[i] for i in args)})")
        start, first = end, False
    return [tuple(int(v) for v in t) for t in tables], labels


def clone_of_algebra(alg: FiniteAlgebra, N: int, ceiling: int = CLONE_CEILING) -> AlgebraClone:
    """alg の項演算を T(0..N) まで閉包して AlgebraClone にする"""
    if N < 1:
        raise ArityError("切り詰めの上限 N は 1 以上です")
    tables, labels = {}, {}
    for n in range(N + 1):
        tables[n], labels[n] = _closure(alg, n, ceiling)
        logger.info("%s: |T(%d)| = %d", alg.name, n, len(tables[n]))
    return AlgebraClone(alg.name, alg.k, N, tables, labels)


def centralizer_clone(base: FiniteAlgebra, N: int, ceiling: int = CLONE_CEILING) -> AlgebraClone:
    """base のすべての演算と具体的な関数として可換な演算の全体（辞書式の表順）"""
    k = base.k
    tables, labels = {}, {}
    for n in range(N + 1):
        candidates = k ** (k**n)
        if candidates > ceiling:
            raise CeilingExceededError(
                f"{base.name}: 中心化クローンの候補 k^(k^{n}) が上限を超えました", ceiling, candidates
            )
        kept = []
        for f in product(range(k), repeat=k**n):
            if all(
                functions_commute(f, n, base.tables[s], base.signature.arity(s), k)
                for s in base.signature.symbols
            ):
                kept.append(tuple(f))
        tables[n] = kept
        labels[n] = [_projection_label(t, n, k) for t in kept]
        logger.info("%s の中心化: |T(%d)| = %d", base.name, n, len(kept))
    return AlgebraClone(f"{base.name}_centralizer", k, N, tables, labels)


def _projection_label(table, n, k):
    xs = all_tuples(k, n)
    for i in range(n):
        if tuple(int(v) for v in xs[:, i]) == tuple(table):
            return f"x{i + 1}"
    return str(list(table))


def clone_substitute(c: CloneTruncation, f: int, n: int, gs, m: int) -> int:
    """μ(f; gs)"""
    return c.subst(f, n, gs, m)


# ---------- 公理の検証 ----------


def _budget(report: LawReport, law: str, cases: int) -> bool:
    if report.checked.get(law, 0) >= cases:
        report.truncated = True
        return False
    report.count(law)
    return True


def validate_clone(c: CloneTruncation, arity: int = VALIDATE_ARITY, cases: int = VALIDATE_CASES) -> LawReport:
    """
    アリティ min(N, arity) までの法則を網羅的に確認する
    法則: functoriality_identity / functoriality_composition / units_natural /
          unit_left / unit_right / associativity / naturality_mu / naturality_action / closure
    """
    top = min(c.bound, arity)
    report = LawReport(subject=c.name)
    if top < c.bound:
        report.notes.append(f"arity {top} まで検査（N={c.bound}）")
    d = c.describe

    def guarded(law, fn, witness):
        # μ の未定義は検査対象外、閉包の破れは法則違反として記録
        try:
            if not fn():
                report.record(law, witness())
        except BoundExceededError:
            report.checked[f"{law}_skipped"] = report.checked.get(f"{law}_skipped", 0) + 1
        except ClosureError as e:
            report.record("closure", str(e))

    for n in range(top + 1):
        for f in c.elements(n):
            if _budget(report, "functoriality_identity", cases):
                guarded(
                    "functoriality_identity",
                    lambda: c.act(identity(n), f) == f,
                    lambda: d(f, n),
                )
        for m in range(top + 1):
            for u in all_maps(n, m):
                for i in range(n):
                    if _budget(report, "units_natural", cases):
                        guarded(
                            "units_natural",
                            lambda: c.act(u, c.unit(i, n)) == c.unit(u(i), m),
                            lambda: f"u={u}, i={i + 1}",
                        )
                for p in range(top + 1):
                    for v in all_maps(m, p):
                        w = u.then(v)
                        for f in c.elements(n):
                            if _budget(report, "functoriality_composition", cases):
                                guarded(
                                    "functoriality_composition",
                                    lambda: c.act(w, f) == c.act(v, c.act(u, f)),
                                    lambda: f"f={d(f, n)}, u={u}, v={v}",
                                )

    for n in range(top + 1):
        for m in range(top + 1):
            for f in c.elements(n):
                if _budget(report, "unit_right", cases):
                    guarded(
                        "unit_right",
                        lambda: c.subst(f, n, [c.unit(i, n) for i in range(n)], n) == f,
                        lambda: d(f, n),
                    )
            for gs in product(c.elements(m), repeat=n):
                for i in range(n):
                    if _budget(report, "unit_left", cases):
                        guarded(
                            "unit_left",
                            lambda: c.subst(c.unit(i, n), n, gs, m) == gs[i],
                            lambda: f"π_{i + 1} in T({n}), gs=[{', '.join(d(g, m) for g in gs)}]",
                        )
                for f in c.elements(n):
                    for p in range(top + 1):
                        for u in all_maps(m, p):
                            if _budget(report, "naturality_mu", cases):
                                guarded(
                                    "naturality_mu",
                                    lambda: c.act(u, c.subst(f, n, gs, m))
                                    == c.subst(f, n, [c.act(u, g) for g in gs], p),
                                    lambda: f"f={d(f, n)}, gs=[{', '.join(d(g, m) for g in gs)}], u={u}",
                                )
            # (T(u)f)(gs) = f(gs ∘ u)
            for u in all_maps(n, m):
                for f in c.elements(n):
                    for hs in product(c.elements(top), repeat=m) if m <= top else []:
                        if _budget(report, "naturality_action", cases):
                            guarded(
                                "naturality_action",
                                lambda: c.subst(c.act(u, f), m, hs, top)
                                == c.subst(f, n, [hs[u(i)] for i in range(n)], top),
                                lambda: f"f={d(f, n)}, u={u}",
                            )

    for n in range(top + 1):
        for m in range(top + 1):
            for p in range(top + 1):
                for f in c.elements(n):
                    for gs in product(c.elements(m), repeat=n):
                        for hs in product(c.elements(p), repeat=m):
                            if not _budget(report, "associativity", cases):
                                break
                            guarded(
                                "associativity",
                                lambda: c.subst(c.subst(f, n, gs, m), m, hs, p)
                                == c.subst(f, n, [c.subst(g, m, hs, p) for g in gs], p),
                                lambda: f"f={d(f, n)}, gs=[{', '.join(d(g, m) for g in gs)}], "
                                f"hs=[{', '.join(d(h, p) for h in hs)}]",
                            )
    if report.failures:
        logger.warning("%s: 法則違反 %s", c.name, report.failed_laws())
    return report


# ---------- 可換性 ----------


def _check_pair_bound(c: CloneTruncation, n: int, m: int) -> None:
    if n * m > c.bound:
        raise BoundExceededError(f"{c.name}: n·m = {n * m} が切り詰めを超えます", c.bound, n * m)


def commutation_sides(c: CloneTruncation, f: int, n: int, g: int, m: int):
    """
    射影と代入だけで両辺を作る
        左辺 = f(g(π_{i1}, ..., π_{im}) for i)
        右辺 = g(f(π_{1j}, ..., π_{nj}) for j)
    """
    _check_pair_bound(c, n, m)
    nm = n * m
    rows = [c.subst(g, m, [c.unit(i * m + j, nm) for j in range(m)], nm) for i in range(n)]
    cols = [c.subst(f, n, [c.unit(i * m + j, nm) for i in range(n)], nm) for j in range(m)]
    return c.subst(f, n, rows, nm), c.subst(g, m, cols, nm)


def op_commutes(c: CloneTruncation, f: int, n: int, g: int, m: int) -> bool:
    lhs, rhs = commutation_sides(c, f, n, g, m)
    return lhs == rhs


@dataclass(frozen=True)
class SubstPair:
    """(T∘T)(p) の代表元 (外側の要素; 内側の要素の列)"""

    outer: int
    outer_arity: int
    inner: tuple
    inner_arity: int


@dataclass(frozen=True)
class ClassifiedFamily:
    """
    n·m ≤ bound の各 (n, m) で A(n) × B(m) -> C(nm) を与える族
        component(f, n, g, m) が値を返す
    """

    name: str
    bound: int
    component: Callable

    def __call__(self, f, n, g, m):
        if n * m > self.bound:
            raise BoundExceededError(f"{self.name}: n·m が上限を超えます", self.bound, n * m)
        return self.component(f, n, g, m)


def sigma_tau_families(c: CloneTruncation):
    """
    σ(f, g) = (f; T(β_1)g, ..., T(β_n)g)    β_i = row_injection(i): m -> nm
    τ(f, g) = (g; T(α_1)f, ..., T(α_m)f)    α_j = column_injection(j): n -> nm
    """

    def sigma(f, n, g, m):
        return SubstPair(f, n, tuple(c.act(row_injection(i, n, m), g) for i in range(n)), n * m)

    def tau(f, n, g, m):
        return SubstPair(g, m, tuple(c.act(column_injection(j, n, m), f) for j in range(m)), n * m)

    return ClassifiedFamily("sigma", c.bound, sigma), ClassifiedFamily("tau", c.bound, tau)


def multiply(c: CloneTruncation, pair: SubstPair) -> int:
    """m = μ: T∘T -> T"""
    return c.subst(pair.outer, pair.outer_arity, pair.inner, pair.inner_arity)


def op_commutes_duoidal(c: CloneTruncation, f: int, n: int, g: int, m: int) -> bool:
    """六角形の 2 つの経路 m∘σ と m∘τ を付け替え作用経由で比べる"""
    _check_pair_bound(c, n, m)
    sigma, tau = sigma_tau_families(c)
    return multiply(c, sigma(f, n, g, m)) == multiply(c, tau(f, n, g, m))


def admissible_pairs(c: CloneTruncation):
    """n·m ≤ N の組 (f, n, g, m) を (n, f, m, g) の辞書式順で列挙"""
    for n in range(c.bound + 1):
        for f in c.elements(n):
            for m in range(c.bound + 1):
                if n * m > c.bound:
                    continue
                for g in c.elements(m):
                    yield f, n, g, m


@dataclass(frozen=True)
class CommutativeUpTo:
    bound: int


@dataclass(frozen=True)
class NotCommutative:
    f: int
    n: int
    g: int
    m: int
    witness: str


def is_commutative_clone(c: CloneTruncation):
    for f, n, g, m in admissible_pairs(c):
        if not op_commutes(c, f, n, g, m):
            witness = f"({c.describe(f, n)}, {c.describe(g, m)})"
            return NotCommutative(f, n, g, m, witness)
    return CommutativeUpTo(c.bound)


def hexagon_agreement(alg: FiniteAlgebra, N: int, ceiling: int = CLONE_CEILING) -> Report:
    """
    T(0..N) の n·m ≤ N の組すべてで、交換則の直接判定と六角形の 2 経路の比較が一致するか
    閉包が ceiling を超えた代数は unknown（exhausted に上限を書く）
    """
    report = Report(command="hexagon", subject=alg.name, verdict="pass", bounds={"arity": N, "clone_ceiling": ceiling})
    try:
        c = clone_of_algebra(alg, N, ceiling)
    except CeilingExceededError as e:
        logger.warning("%s: 閉包が上限に達したので判定しません", alg.name)
        report.verdict = "unknown"
        report.exhausted = f"clone_ceiling={ceiling}"
        report.notes.append(str(e))
        return report
    pairs = 0
    for f, n, g, m in admissible_pairs(c):
        pairs += 1
        if op_commutes(c, f, n, g, m) != op_commutes_duoidal(c, f, n, g, m):
            report.verdict = "fail"
            report.witnesses.append(f"({c.describe(f, n)}, {c.describe(g, m)})")
            break
    report.counts["pairs"] = pairs
    return report


def tuple_commutes(c: CloneTruncation, fs, gs) -> bool:
    """(f, n) の列と (g, m) の列が組ごとにすべて可換か"""
    return all(op_commutes(c, f, n, g, m) for f, n in fs for g, m in gs)


def clone_centre(c: CloneTruncation) -> dict:
    """アリティごとに、切り詰め内のすべての要素と可換な要素の一覧"""
    centre = {}
    for n in range(c.bound + 1):
        centre[n] = [
            f
            for f in c.elements(n)
            if all(
                op_commutes(c, f, n, g, m)
                for m in range(c.bound + 1)
                if n * m <= c.bound
                for g in c.elements(m)
            )
        ]
    return centre


def check_family_naturality(c: CloneTruncation, family: ClassifiedFamily, arity: int = VALIDATE_ARITY,
                            cases: int = VALIDATE_CASES) -> LawReport:
    """
    C(u×v)(m∘fam(f, g)) = m∘fam(A(u)f, B(v)g) を n·m, n'·m' ≤ min(N, arity) で確認
    （T∘T の代表元は余エンドの関係で一意でないため、m を通して比べる）
    """
    top = min(c.bound, arity)
    report = LawReport(subject=f"{c.name}:{family.name}")
    law = f"naturality_{family.name}"
    for n, m, n2, m2 in product(range(top + 1), repeat=4):
        if n * m > top or n2 * m2 > top:
            continue
        for u in all_maps(n, n2):
            for v in all_maps(m, m2):
                uv = FinMap(
                    n * m, n2 * m2, tuple(u(i) * m2 + v(j) for i in range(n) for j in range(m))
                )
                for f in c.elements(n):
                    for g in c.elements(m):
                        if not _budget(report, law, cases):
                            return report
                        try:
                            lhs = c.act(uv, _value(c, family(f, n, g, m)))
                            rhs = _value(c, family(c.act(u, f), n2, c.act(v, g), m2))
                        except BoundExceededError:
                            continue
                        if lhs != rhs:
                            report.record(
                                law, f"f={c.describe(f, n)}, g={c.describe(g, m)}, u={u}, v={v}"
                            )
    return report


def _value(c, x):
    return multiply(c, x) if isinstance(x, SubstPair) else x


# ---------- 双モノイド（duoid）構造 ----------


@dataclass
class DuoidData:
    """可換クローン上の ∗ 乗法 ν = m∘σ と検査結果"""

    nu: ClassifiedFamily
    report: LawReport


def duoid_interchange_holds(c: CloneTruncation, nu: ClassifiedFamily, x, a, ys, b, z, cc, ws, d) -> bool:
    """ν(μ(x; ys), μ(z; ws)) = μ(ν(x, z); ν(y_i, w_j) を行優先に並べた列)"""
    left = nu(c.subst(x, a, ys, b), b, c.subst(z, cc, ws, d), d)
    inner = [nu(ys[i], b, ws[j], d) for i in range(a) for j in range(cc)]
    right = c.subst(nu(x, a, z, cc), a * cc, inner, b * d)
    return left == right


@dataclass(frozen=True)
class DuoidVerdict:
    """可換なクローンなら data に双モノイド構造、そうでなければ witness に最初の可換でない組"""

    data: DuoidData | None = None
    witness: str | None = None

    @property
    def is_duoid(self) -> bool:
        return self.data is not None


def duoid_structure(c: CloneTruncation, cases: int = VALIDATE_CASES) -> DuoidVerdict:
    """
    可換なクローンに双モノイド構造 (ν = m∘σ) を載せる
    ν = m∘σ と m∘τ の一致、双モノイドの交換則をインスタンスごとに確認する
    """
    verdict = is_commutative_clone(c)
    if isinstance(verdict, NotCommutative):
        return DuoidVerdict(witness=verdict.witness)
    sigma, tau = sigma_tau_families(c)
    nu = ClassifiedFamily("nu", c.bound, lambda f, n, g, m: multiply(c, sigma(f, n, g, m)))
    report = LawReport(subject=f"{c.name}:duoid")
    for f, n, g, m in admissible_pairs(c):
        if not _budget(report, "nu_equals_m_tau", cases):
            break
        if nu(f, n, g, m) != multiply(c, tau(f, n, g, m)):
            report.record("nu_equals_m_tau", f"({c.describe(f, n)}, {c.describe(g, m)})")
    N = c.bound
    for a, b, cc, d in product(range(N + 1), repeat=4):
        if a * cc > N or b * d > N:
            continue
        for x in c.elements(a):
            for z in c.elements(cc):
                for ys in product(c.elements(b), repeat=a):
                    for ws in product(c.elements(d), repeat=cc):
                        if not _budget(report, "duoid_interchange", cases):
                            return DuoidVerdict(DuoidData(nu, report))
                        try:
                            ok = duoid_interchange_holds(c, nu, x, a, ys, b, z, cc, ws, d)
                        except BoundExceededError:
                            continue
                        if not ok:
                            report.record(
                                "duoid_interchange",
                                f"x={c.describe(x, a)}, z={c.describe(z, cc)}",
                            )
    return DuoidVerdict(DuoidData(nu, report))


# ---------- ダンプ ----------


def render_clone(c: CloneTruncation) -> str:
    """要素 id・アリティ・表（または名前）を 1 行ずつ書き出す"""
    lines = [f"# clone {c.name} N={c.bound}", "# id\tarity\telement"]
    for n in range(c.bound + 1):
        for f in c.elements(n):
            lines.append(f"{f}\t{n}\t{c.describe(f, n)}")
    return "\n".join(lines)


def clone_sizes(c: CloneTruncation) -> list:
    return [c.size(n) for n in range(c.bound + 1)]
