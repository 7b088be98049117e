# 有限基数の間の写像（F と P の射）
from dataclasses import dataclass
from itertools import permutations, product


@dataclass(frozen=True)
class FinMap:
    """
    u: n -> m を値のリストで表す（0 始まり）
        domain : n
        codomain : m
        values : 長さ n、各値は 0..m-1
    """

    domain: int
    codomain: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.domain:
            raise ValueError(f"FinMap の長さが domain と一致しません: {self}")
        if any(not 0 <= v < self.codomain for v in self.values):
            raise ValueError(f"FinMap の値が範囲外です: {self}")

    def __call__(self, i: int) -> int:
        return self.values[i]

    @property
    def is_bijective(self) -> bool:
        return self.domain == self.codomain and len(set(self.values)) == self.domain

    def then(self, other: "FinMap") -> "FinMap":
        """self の後に other を合成（other ∘ self）"""
        if self.codomain != other.domain:
            raise ValueError("合成できない FinMap です")
        return FinMap(self.domain, other.codomain, tuple(other.values[v] for v in self.values))

    def inverse(self) -> "FinMap":
        if not self.is_bijective:
            raise ValueError("全単射でない FinMap は逆写像を持ちません")
        inv = [0] * self.domain
        for i, v in enumerate(self.values):
            inv[v] = i
        return FinMap(self.domain, self.domain, tuple(inv))

    def __str__(self):
        return f"[{','.join(str(v) for v in self.values)}]:{self.domain}->{self.codomain}"


def identity(n: int) -> FinMap:
    return FinMap(n, n, tuple(range(n)))


def all_maps(n: int, m: int):
    """n -> m の全写像を辞書式順で列挙"""
    for values in product(range(m), repeat=n):
        yield FinMap(n, m, values)


def all_permutations(n: int):
    for values in permutations(range(n)):
        yield FinMap(n, n, values)


# x_{ij} -> i*m + j（行優先）の平坦化


def flat_index(i: int, j: int, m: int) -> int:
    return i * m + j


def row_injection(i: int, n: int, m: int) -> FinMap:
    """m -> nm, j |-> (i, j)"""
    return FinMap(m, n * m, tuple(flat_index(i, j, m) for j in range(m)))


def column_injection(j: int, n: int, m: int) -> FinMap:
    """n -> nm, i |-> (i, j)"""
    return FinMap(n, n * m, tuple(flat_index(i, j, m) for i in range(n)))


def transpose(n: int, m: int) -> FinMap:
    """
    nm -> mn の対称 sigma
    列優先の位置 j*n + i を行優先の位置 i*m + j に送る
    """
    values = [0] * (n * m)
    for i in range(n):
        for j in range(m):
            values[j * n + i] = flat_index(i, j, m)
    return FinMap(n * m, n * m, tuple(values))
