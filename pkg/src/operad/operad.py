# 対称オペラドの切り詰め、Th による理論化、組ごとの可換性
from src.algebra.clone import CloneTruncation
from src.common.errors import ArityError, BoundExceededError
from src.common.finmap import FinMap, all_permutations, identity, transpose
from src.common.report import LawReport
from src.common.settings import VALIDATE_CASES

from itertools import permutations, product
import logging

from networkx.utils import UnionFind

logger = logging.getLogger(__name__)


class SymOperadTruncation:
    """
    アリティ K までの対称オペラド
        O(n) の要素は 0..size(n)-1 の id
        act(f, n, sigma) : 右作用 f·σ（(f·σ)(x_1..x_n) = f(x_σ(1), ..., x_σ(n))）
        compose(f, k, gs) : γ(f; g_1..g_k)、gs は (要素, アリティ) の列
        unit_element : id ∈ O(1)
    """

    name = "operad"
    K = 0
    unit_element = 0

    def size(self, n: int) -> int:
        raise NotImplementedError

    def elements(self, n: int) -> range:
        return range(self.size(n))

    def act(self, f: int, n: int, sigma: FinMap) -> int:
        raise NotImplementedError

    def _compose(self, f: int, k: int, gs) -> int:
        raise NotImplementedError

    def compose(self, f: int, k: int, gs) -> int:
        gs = [tuple(g) for g in gs]
        if len(gs) != k:
            raise ArityError(f"{self.name}: γ の引数の数が一致しません: {len(gs)} != {k}")
        total = sum(m for _, m in gs)
        if total > self.K or k > self.K:
            raise BoundExceededError(f"{self.name}: γ のアリティ {total} が K を超えます", self.K, total)
        return self._compose(f, k, gs)

    def describe(self, f: int, n: int) -> str:
        return f"#{f}/{n}"


class ComOperad(SymOperadTruncation):
    """可換オペラド: O(n) は 1 点、作用は自明"""

    def __init__(self, K: int):
        self.name = "Com"
        self.K = K

    def size(self, n):
        return 1 if 0 <= n <= self.K else 0

    def act(self, f, n, sigma):
        return 0

    def _compose(self, f, k, gs):
        return 0

    def describe(self, f, n):
        return f"c{n}"


class AssOperad(SymOperadTruncation):
    """
    結合オペラド（単位的）: O(n) = S_n、要素は変数の並び w（0 始まり）
    f·σ = σ∘w、γ はブロックごとの並べ替え
    """

    def __init__(self, K: int):
        self.name = "Ass"
        self.K = K
        self.words = {n: list(permutations(range(n))) for n in range(K + 1)}
        self.index = {n: {w: i for i, w in enumerate(ws)} for n, ws in self.words.items()}

    def size(self, n):
        return len(self.words.get(n, []))

    def word(self, f, n):
        return self.words[n][f]

    def element(self, word) -> int:
        return self.index[len(word)][tuple(word)]

    def act(self, f, n, sigma):
        return self.element(tuple(sigma(v) for v in self.words[n][f]))

    def _compose(self, f, k, gs):
        sizes = [m for _, m in gs]
        offsets = [sum(sizes[:i]) for i in range(k)]
        out = []
        for v in self.words[k][f]:
            g, m = gs[v]
            out.extend(offsets[v] + s for s in self.words[m][g])
        return self.element(tuple(out))

    def describe(self, f, n):
        return "e_{}".format(n) if f == 0 else "w(" + ",".join(str(v + 1) for v in self.words[n][f]) + ")"


class TrivialOperad(SymOperadTruncation):
    """id だけのオペラド"""

    def __init__(self, K: int):
        self.name = "I"
        self.K = K

    def size(self, n):
        return 1 if n == 1 else 0

    def act(self, f, n, sigma):
        return 0

    def _compose(self, f, k, gs):
        return 0

    def describe(self, f, n):
        return "id"


class TabulatedOperad(SymOperadTruncation):
    """
    表で与えるオペラド（ファイル入力・欠陥の埋め込み用）
        sizes : n -> |O(n)|
        actions : (n, σ.values) -> 要素ごとの像
        gammas : (f, ((g_1, m_1), ...)) -> 結果
    """

    def __init__(self, name, K, sizes, actions, gammas, unit_element=0, labels=None):
        self.name = name
        self.K = K
        self.sizes = dict(sizes)
        self.actions = dict(actions)
        self.gammas = dict(gammas)
        self.unit_element = unit_element
        self.labels = labels or {}

    @classmethod
    def from_operad(cls, o: SymOperadTruncation):
        sizes = {n: o.size(n) for n in range(o.K + 1)}
        actions = {}
        for n in range(o.K + 1):
            for sigma in all_permutations(n):
                actions[(n, sigma.values)] = tuple(o.act(f, n, sigma) for f in o.elements(n))
        gammas = {}
        for k in range(o.K + 1):
            for arities in arity_lists(k, o.K):
                for f in o.elements(k):
                    for gs in product(*(o.elements(m) for m in arities)):
                        args = tuple(zip(gs, arities))
                        gammas[(f, args)] = o.compose(f, k, args)
        labels = {n: [o.describe(f, n) for f in o.elements(n)] for n in range(o.K + 1)}
        return cls(o.name, o.K, sizes, actions, gammas, o.unit_element, labels)

    def with_gamma(self, f, args, value):
        gammas = dict(self.gammas)
        gammas[(f, tuple(tuple(a) for a in args))] = value
        return TabulatedOperad(self.name, self.K, self.sizes, self.actions, gammas, self.unit_element, self.labels)

    def size(self, n):
        return self.sizes.get(n, 0)

    def act(self, f, n, sigma):
        return self.actions[(n, tuple(sigma.values))][f]

    def _compose(self, f, k, gs):
        key = (f, tuple(gs))
        if key not in self.gammas:
            raise BoundExceededError(f"{self.name}: γ の表に {key} がありません", self.K, sum(m for _, m in gs))
        return self.gammas[key]

    def describe(self, f, n):
        names = self.labels.get(n)
        return names[f] if names else super().describe(f, n)


def arity_lists(k: int, K: int):
    """和が K 以下の長さ k のアリティ列"""
    for arities in product(range(K + 1), repeat=k):
        if sum(arities) <= K:
            yield arities


def operad_compose(o: SymOperadTruncation, f: int, k: int, gs) -> int:
    return o.compose(f, k, gs)


# ---------- 公理の検証 ----------


def _block_sum(perms, sizes) -> FinMap:
    """τ_1 ⊕ ... ⊕ τ_k"""
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    values = [offsets[i] + p(s) for i, p in enumerate(perms) for s in range(sizes[i])]
    total = sum(sizes)
    return FinMap(total, total, tuple(values))


def _block_permutation(sigma: FinMap, sizes) -> FinMap:
    """
    γ(f·σ; h) = γ(f; h_σ(1), ..., h_σ(k))·ρ となる ρ
    ρ(o_i + s) = o'_σ(i) + s（o は並べ替え後、o' は元のブロック位置）
    """
    k = len(sizes)
    original = [sum(sizes[:i]) for i in range(k)]
    permuted_sizes = [sizes[sigma(i)] for i in range(k)]
    permuted = [sum(permuted_sizes[:i]) for i in range(k)]
    values = [0] * sum(sizes)
    for i in range(k):
        for s in range(permuted_sizes[i]):
            values[permuted[i] + s] = original[sigma(i)] + s
    total = sum(sizes)
    return FinMap(total, total, tuple(values))


def validate_operad(o: SymOperadTruncation, cases: int = VALIDATE_CASES) -> LawReport:
    """
    K までの法則を網羅的に確認する
    法則: action_identity / action_composition / unit_left / unit_right /
          associativity / equivariance_top / equivariance_bottom
    """
    report = LawReport(subject=o.name)
    d = o.describe
    unit = o.unit_element

    def within(law):
        if report.checked.get(law, 0) >= cases:
            report.truncated = True
            return False
        report.count(law)
        return True

    for n in range(o.K + 1):
        perms = list(all_permutations(n))
        for f in o.elements(n):
            if within("action_identity") and o.act(f, n, identity(n)) != f:
                report.record("action_identity", d(f, n))
            for sigma in perms:
                for tau in perms:
                    if not within("action_composition"):
                        break
                    if o.act(o.act(f, n, sigma), n, tau) != o.act(f, n, sigma.then(tau)):
                        report.record("action_composition", f"f={d(f, n)}, σ={sigma}, τ={tau}")
            if o.K >= 1 and o.size(1):
                if within("unit_left") and o.compose(unit, 1, [(f, n)]) != f:
                    report.record("unit_left", d(f, n))
                if within("unit_right") and o.compose(f, n, [(unit, 1)] * n) != f:
                    report.record("unit_right", d(f, n))

    for k in range(o.K + 1):
        for arities in arity_lists(k, o.K):
            total = sum(arities)
            for f in o.elements(k):
                for gs in product(*(o.elements(m) for m in arities)):
                    args = list(zip(gs, arities))
                    base = o.compose(f, k, args)
                    # 上側の同変性
                    for sigma in all_permutations(k):
                        if not within("equivariance_top"):
                            break
                        inv = sigma.inverse()
                        # h_i = args[σ^{-1}(i)] とおくと h_σ(i) = args[i]
                        hs = [args[inv(i)] for i in range(k)]
                        lhs = o.compose(o.act(f, k, sigma), k, hs)
                        rho = _block_permutation(sigma, [m for _, m in hs])
                        rhs = o.act(base, total, rho)
                        if lhs != rhs:
                            report.record("equivariance_top", f"f={d(f, k)}, σ={sigma}")
                    # 下側の同変性
                    for taus in product(*(list(all_permutations(m)) for m in arities)):
                        if not within("equivariance_bottom"):
                            break
                        acted = [(o.act(g, m, t), m) for (g, m), t in zip(args, taus)]
                        lhs = o.compose(f, k, acted)
                        rhs = o.act(base, total, _block_sum(taus, list(arities)))
                        if lhs != rhs:
                            report.record(
                                "equivariance_bottom",
                                f"f={d(f, k)}, gs=[{', '.join(d(g, m) for g, m in args)}]",
                            )
                    # 結合律
                    for inner in product(*(arity_lists(m, o.K) for m in arities)):
                        flat = [a for part in inner for a in part]
                        if sum(flat) > o.K:
                            continue
                        for hs in product(*(o.elements(a) for a in flat)):
                            if not within("associativity"):
                                break
                            hargs = list(zip(hs, flat))
                            lhs = o.compose(base, total, hargs)
                            parts, pos = [], 0
                            for (g, m), part in zip(args, inner):
                                parts.append((o.compose(g, m, hargs[pos : pos + m]), sum(part)))
                                pos += m
                            rhs = o.compose(f, k, parts)
                            if lhs != rhs:
                                report.record("associativity", f"f={d(f, k)}")
    if report.failures:
        logger.warning("%s: 法則違反 %s", o.name, report.failed_laws())
    return report


# ---------- 可換性（Boardman–Vogt の関係） ----------


def bv_sides(o: SymOperadTruncation, psi: int, n: int, phi: int, m: int):
    """(γ(ψ; φ, ..., φ), γ(φ; ψ, ..., ψ)·σ)、σ は転置 j·n+i -> i·m+j"""
    if n * m > o.K:
        raise BoundExceededError(f"{o.name}: n·m = {n * m} が K を超えます", o.K, n * m)
    lhs = o.compose(psi, n, [(phi, m)] * n)
    rhs = o.act(o.compose(phi, m, [(psi, n)] * m), n * m, transpose(n, m))
    return lhs, rhs


def operad_pair_commutes(o: SymOperadTruncation, psi: int, n: int, phi: int, m: int) -> bool:
    lhs, rhs = bv_sides(o, psi, n, phi, m)
    return lhs == rhs


# ---------- Th(O) ----------


class OperadTheory(CloneTruncation):
    """
    Th(O)(n) = (⨿_{k ≤ K} O(k) × n^k) / S_k
    要素は軌道の代表 (k, f, t)（辞書式最小）、f(x_t(1), ..., x_t(k)) を表す
    """

    def __init__(self, o: SymOperadTruncation, N: int):
        self.operad = o
        self.name = f"Th({o.name})"
        self.bound = N
        self.reps = {}
        self.ids = {}
        for n in range(N + 1):
            self._orbits(n)
            logger.info("%s(%d): %d 軌道", self.name, n, len(self.reps[n]))

    def _orbits(self, n: int):
        o = self.operad
        uf = UnionFind()
        keys = []
        for k in range(o.K + 1):
            perms = list(all_permutations(k))
            for f in o.elements(k):
                for t in product(range(n), repeat=k):
                    key = (k, f, t)
                    uf[key]  # 登録
                    keys.append(key)
                    for sigma in perms:
                        # (f·σ, t) ~ (f, t∘σ)
                        uf.union((k, o.act(f, k, sigma), t), (k, f, tuple(t[sigma(i)] for i in range(k))))
        classes = {}
        for key in keys:
            root = uf[key]
            if root not in classes or key < classes[root]:
                classes[root] = key
        reps = sorted(set(classes.values()))
        rep_id = {r: i for i, r in enumerate(reps)}
        self.reps[n] = reps
        self.ids[n] = {key: rep_id[classes[uf[key]]] for key in keys}

    def size(self, n):
        self.check_arity(n)
        return len(self.reps[n])

    def element(self, k: int, f: int, t, n: int) -> int:
        self.check_arity(n)
        return self.ids[n][(k, f, tuple(t))]

    def embed(self, f: int, k: int) -> int:
        """Th(f) = (f, 恒等な変数の並び) ∈ Th(O)(k)"""
        return self.element(k, f, tuple(range(k)), k)

    def act(self, u, x):
        k, f, t = self.reps[u.domain][x]
        return self.element(k, f, tuple(u(v) for v in t), u.codomain)

    def unit(self, i, n):
        if not 0 <= i < n:
            raise ArityError(f"射影 π_{i + 1} は Th(O)({n}) にありません")
        return self.element(1, self.operad.unit_element, (i,), n)

    def subst(self, x, n, gs, m):
        self.check_arity(n)
        self.check_arity(m)
        gs = list(gs)
        if len(gs) != n:
            raise ArityError(f"代入の引数の数が一致しません: {len(gs)} != {n}")
        k, f, t = self.reps[n][x]
        inner = [self.reps[m][gs[v]] for v in t]
        total = sum(ki for ki, _, _ in inner)
        if total > self.operad.K:
            raise BoundExceededError(f"{self.name}: 代入に必要なアリティ {total} が K を超えます", self.operad.K, total)
        head = self.operad.compose(f, k, [(fi, ki) for ki, fi, _ in inner])
        vars_ = tuple(v for _, _, ti in inner for v in ti)
        return self.element(total, head, vars_, m)

    def describe(self, x, n):
        k, f, t = self.reps[n][x]
        return f"{self.operad.describe(f, k)}[{','.join(f'x{v + 1}' for v in t)}]"


def theory_of_operad(o: SymOperadTruncation, N: int) -> OperadTheory:
    if N < 1:
        raise ArityError("N は 1 以上です")
    return OperadTheory(o, N)
