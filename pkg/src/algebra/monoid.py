# 1 対象の場合: 有限モノイド、可換な余スパン、中心化、⊙ の普遍性
from src.common.errors import CeilingExceededError, CodomainMismatchError, InvalidStructureError
from src.common.report import Report
from src.common.settings import MODEL_CEILING
from src.common.workers import parallel_map

from dataclasses import dataclass
from functools import partial
from itertools import permutations, product
import logging
import numpy as np
import time

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteMonoid:
    """
    carrier {0..k-1} 上のモノイド
        table : 行優先の乗算表（長さ k^2）
        unit : 単位元
    """

    name: str
    k: int
    table: tuple
    unit: int

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        k = self.k
        if len(self.table) != k * k or any(not 0 <= v < k for v in self.table):
            raise InvalidStructureError(f"{self.name}: 乗算表の形が不正です")
        if not 0 <= self.unit < k:
            raise InvalidStructureError(f"{self.name}: 単位元 {self.unit} が carrier にありません")
        t = np.asarray(self.table, dtype=np.int64).reshape(k, k)
        if not (np.array_equal(t[self.unit], np.arange(k)) and np.array_equal(t[:, self.unit], np.arange(k))):
            raise InvalidStructureError(f"{self.name}: 単位律が成り立ちません")
        # (ab)c = a(bc) を一括で確認
        if not np.array_equal(t[t, :], t[:, t]):
            a, b, c = map(int, np.argwhere(t[t, :] != t[:, t])[0])
            raise InvalidStructureError(f"{self.name}: 結合律が ({a},{b},{c}) で成り立ちません")

    def mul(self, a: int, b: int) -> int:
        return self.table[a * self.k + b]

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64).reshape(self.k, self.k)

    def key(self) -> tuple:
        return (self.k, self.table, self.unit)


@dataclass(frozen=True)
class MonoidMap:
    source: FiniteMonoid
    target: FiniteMonoid
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not is_monoid_hom(self.source, self.target, self.values):
            raise InvalidStructureError(
                f"{self.source.name} -> {self.target.name}: {list(self.values)} はモノイド準同型ではありません"
            )

    def __call__(self, a: int) -> int:
        return self.values[a]


def is_monoid_hom(a: FiniteMonoid, b: FiniteMonoid, h) -> bool:
    h = np.asarray(h, dtype=np.int64)
    if h.shape != (a.k,) or (a.k and (h.min() < 0 or h.max() >= b.k)):
        return False
    if a.k and h[a.unit] != b.unit:
        return False
    # h(xy) = h(x)h(y)
    return bool(np.array_equal(h[a.array], b.array[h[:, None], h[None, :]]))


def identity_map(m: FiniteMonoid) -> MonoidMap:
    return MonoidMap(m, m, tuple(range(m.k)))


def enumerate_monoid_homs(a: FiniteMonoid, b: FiniteMonoid) -> list:
    return [MonoidMap(a, b, h) for h in product(range(b.k), repeat=a.k) if is_monoid_hom(a, b, h)]


# ---------- 可換な余スパンと中心化 ----------


def cospan_witness(f: MonoidMap, g: MonoidMap):
    """f(a)g(b) != g(b)f(a) となる最初の (a, b)。可換なら None"""
    if f.target.key() != g.target.key():
        raise CodomainMismatchError(f"余域が異なります: {f.target.name} != {g.target.name}")
    c = f.target.array
    fa = np.asarray(f.values, dtype=np.int64)
    gb = np.asarray(g.values, dtype=np.int64)
    bad = np.argwhere(c[fa[:, None], gb[None, :]] != c[gb[None, :], fa[:, None]])
    if bad.size == 0:
        return None
    a, b = map(int, bad[0])
    return a, b


def monoid_cospan_commutes(f: MonoidMap, g: MonoidMap) -> bool:
    return cospan_witness(f, g) is None


def is_commutative_monoid(m: FiniteMonoid) -> bool:
    return monoid_cospan_commutes(identity_map(m), identity_map(m))


@dataclass(frozen=True)
class Submonoid:
    """部分モノイド（elements は親の要素を昇順に並べたもの、新しいラベルはその位置）"""

    monoid: FiniteMonoid
    elements: tuple
    parent: FiniteMonoid

    def inclusion(self) -> MonoidMap:
        return MonoidMap(self.monoid, self.parent, self.elements)


def submonoid(parent: FiniteMonoid, elements, name: str) -> Submonoid:
    elements = tuple(sorted(set(int(e) for e in elements)))
    pos = {e: i for i, e in enumerate(elements)}
    table = []
    for a in elements:
        for b in elements:
            ab = parent.mul(a, b)
            if ab not in pos:
                raise InvalidStructureError(f"{name}: 積 {a}*{b}={ab} で閉じていません")
            table.append(pos[ab])
    if parent.unit not in pos:
        raise InvalidStructureError(f"{name}: 単位元を含みません")
    return Submonoid(FiniteMonoid(name, len(elements), tuple(table), pos[parent.unit]), elements, parent)


def monoid_centralizer(f: MonoidMap) -> Submonoid:
    """{m ∈ M : m·f(n) = f(n)·m がすべての n で成り立つ}"""
    c = f.target.array
    fn = np.asarray(sorted(set(f.values)), dtype=np.int64)
    keep = [m for m in range(f.target.k) if np.array_equal(c[m, fn], c[fn, m])]
    return submonoid(f.target, keep, f"C({f.source.name}->{f.target.name})")


def monoid_centre(m: FiniteMonoid) -> Submonoid:
    return monoid_centralizer(identity_map(m))


def image_within(f: MonoidMap, sub: Submonoid) -> bool:
    return set(f.values) <= set(sub.elements)


# ---------- 同型を除いたモノイドの列挙 ----------


def _shell_cells(k: int) -> list:
    """単位元 0 以外のセルを max(a, b) の昇順に並べる（標準形はこの順の辞書式最小）"""
    cells = []
    for m in range(1, k):
        for a in range(1, m):
            cells.extend([(a, m), (m, a)])
        cells.append((m, m))
    return cells


def _associative_at(t: list, k: int, a: int, b: int) -> bool:
    """セル (a, b) を埋めたことで新たに確認できる三つ組だけを見る"""

    def broken(x, y, z):
        xy, yz = t[x][y], t[y][z]
        if xy < 0 or yz < 0:
            return False
        left, right = t[xy][z], t[x][yz]
        return left >= 0 and right >= 0 and left != right

    for z in range(k):
        if broken(a, b, z) or broken(z, a, b):
            return False
    for x in range(k):
        for y in range(k):
            v = t[x][y]
            if v == a and broken(x, y, b):
                return False
            if v == b and broken(a, x, y):
                return False
    return True


def _orderly_monoids(k: int, ceiling: int) -> list:
    """
    単位元を 0 に固定し、0 を動かさない置換で辞書式最小な表だけを生成する
    途中の表も最小性を満たさなければ枝刈りする
    """
    cells = _shell_cells(k)
    t = [[-1] * k for _ in range(k)]
    for x in range(k):
        t[0][x] = x
        t[x][0] = x
    arr = np.asarray(t, dtype=np.int64)
    perms = np.asarray([(0,) + p for p in permutations(range(1, k))], dtype=np.int64).reshape(-1, k)
    inverse = np.argsort(perms, axis=1)
    ca = np.asarray([a for a, _ in cells], dtype=np.int64)
    cb = np.asarray([b for _, b in cells], dtype=np.int64)
    qa, qb = inverse[:, ca], inverse[:, cb]
    rows = np.arange(perms.shape[0])
    found = []
    nodes = 0

    def minimal() -> bool:
        # 置換 p で貼り替えた表: R[a][b] = p[T[p^-1 a][p^-1 b]]
        src = arr[qa, qb]
        relabeled = np.where(src >= 0, perms[rows[:, None], np.maximum(src, 0)], -1)
        current = arr[ca, cb]
        differ = (relabeled != current) | (relabeled < 0) | (current[None, :] < 0)
        first = differ.argmax(axis=1)
        r, c = relabeled[rows, first], current[first]
        return not np.any(differ.any(axis=1) & (r >= 0) & (c >= 0) & (r < c))

    def search(pos, top):
        nonlocal nodes
        nodes += 1
        if nodes > ceiling:
            raise CeilingExceededError(f"{k} 元モノイドの列挙が上限を超えました", ceiling, nodes)
        if pos == len(cells):
            found.append(tuple(v for row in t for v in row))
            return
        a, b = cells[pos]
        # まだ現れていない元は互いに入れ替えられるので、そのうち最小のものだけ試す
        limit = min(k - 1, max(top, a, b) + 1)
        for v in range(limit + 1):
            t[a][b] = v
            arr[a, b] = v
            if _associative_at(t, k, a, b) and minimal():
                search(pos + 1, max(top, v))
        t[a][b] = -1
        arr[a, b] = -1

    search(0, 0)
    logger.debug("%d 元モノイド: 探索ノード %d", k, nodes)
    return found


_MONOID_CACHE = {}


def monoids_up_to_iso(k: int, ceiling: int = MODEL_CEILING) -> list:
    """k 元モノイドの同型類の代表（単位元 0、標準形の生成順）"""
    if k in _MONOID_CACHE:
        return _MONOID_CACHE[k]
    if k <= 0:
        return []
    found = [FiniteMonoid(f"M{k}_{i}", k, table, 0) for i, table in enumerate(_orderly_monoids(k, ceiling))]
    logger.info("%d 元モノイド: 同型類 %d 個", k, len(found))
    _MONOID_CACHE[k] = found
    return found


def find_isomorphism(a: FiniteMonoid, b: FiniteMonoid):
    """a から b への同型写像（なければ None）"""
    if a.k != b.k:
        return None
    rest_a = [x for x in range(a.k) if x != a.unit]
    rest_b = [y for y in range(b.k) if y != b.unit]
    for p in permutations(rest_b):
        h = [0] * a.k
        h[a.unit] = b.unit
        for x, y in zip(rest_a, p):
            h[x] = y
        if is_monoid_hom(a, b, h):
            return MonoidMap(a, b, tuple(h))
    return None


def cyclic_group(k: int, name=None) -> FiniteMonoid:
    return FiniteMonoid(name or f"Z{k}", k, tuple((a + b) % k for a in range(k) for b in range(k)), 0)


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid("1", 1, (0,), 0)


# ---------- 直積と ⊙ の普遍性 ----------


def product_monoid(a: FiniteMonoid, b: FiniteMonoid) -> FiniteMonoid:
    """(x, y) は x*b.k + y に対応する"""
    table = []
    for x1, y1 in product(range(a.k), range(b.k)):
        for x2, y2 in product(range(a.k), range(b.k)):
            table.append(a.mul(x1, x2) * b.k + b.mul(y1, y2))
    return FiniteMonoid(f"{a.name}x{b.name}", a.k * b.k, tuple(table), a.unit * b.k + b.unit)


def _generated(m: FiniteMonoid, gens) -> set:
    out = {m.unit} | set(gens)
    frontier = list(out)
    while frontier:
        new = []
        for x in frontier:
            for y in list(out):
                for z in (m.mul(x, y), m.mul(y, x)):
                    if z not in out:
                        out.add(z)
                        new.append(z)
        frontier = new
    return out


def _probe(a, b, p, ia, ib, c):
    """probe モノイド c への可換な余スパンがすべて一意に分解するか"""
    tested, failures = 0, []
    homs_a = enumerate_monoid_homs(a, c)
    homs_b = enumerate_monoid_homs(b, c)
    for f in homs_a:
        for g in homs_b:
            if not monoid_cospan_commutes(f, g):
                continue
            tested += 1
            h = tuple(c.mul(f(x), g(y)) for x in range(a.k) for y in range(b.k))
            if not is_monoid_hom(p, c, h):
                failures.append(f"{c.name}: f={list(f.values)}, g={list(g.values)}: 分解写像が準同型ではありません")
                continue
            if tuple(h[v] for v in ia.values) != f.values or tuple(h[v] for v in ib.values) != g.values:
                failures.append(f"{c.name}: f={list(f.values)}, g={list(g.values)}: 入射と整合しません")
    return tested, failures


def monoid_tensor_universal_check(a: FiniteMonoid, b: FiniteMonoid, probe_bound: int, probes=()) -> Report:
    """
    A×B と入射 a -> (a,e), b -> (e,b) が A ⊙ B の普遍性を持つことを
    サイズ probe_bound 以下のすべての probe モノイド（同型を除く）と追加の probes で確認する
    """
    if probe_bound < 1:
        raise InvalidStructureError("probe_bound は 1 以上です")
    start = time.perf_counter()
    p = product_monoid(a, b)
    ia = MonoidMap(a, p, tuple(x * b.k + b.unit for x in range(a.k)))
    ib = MonoidMap(b, p, tuple(a.unit * b.k + y for y in range(b.k)))
    report = Report(
        command="monoid-tensor", subject=f"{a.name}⊙{b.name}", verdict="pass", bounds={"probe_bound": probe_bound}
    )
    # 入射どうしは可換で、像が A×B を生成する（分解の一意性）
    if not monoid_cospan_commutes(ia, ib):
        report.witnesses.append("入射が可換ではありません")
    if _generated(p, set(ia.values) | set(ib.values)) != set(range(p.k)):
        report.witnesses.append("入射の像が A×B を生成しません")

    candidates = [c for size in range(1, probe_bound + 1) for c in monoids_up_to_iso(size)] + list(probes)
    results = parallel_map(partial(_probe, a, b, p, ia, ib), candidates)
    tested = 0
    for count, failures in results:
        tested += count
        report.witnesses.extend(failures)
    report.counts.update({"probes": len(candidates), "cospans": tested})
    if report.witnesses:
        report.verdict = "fail"
    report.timing = time.perf_counter() - start
    return report


def factorization(a: FiniteMonoid, b: FiniteMonoid, f: MonoidMap, g: MonoidMap) -> MonoidMap:
    """可換な余スパン (f, g) の A×B を経由する分解 (x, y) -> f(x)g(y)"""
    if not monoid_cospan_commutes(f, g):
        raise InvalidStructureError("可換でない余スパンは分解しません")
    c = f.target
    return MonoidMap(product_monoid(a, b), c, tuple(c.mul(f(x), g(y)) for x in range(a.k) for y in range(b.k)))
