# 次数付き代数と q-可換性（組みひも c_q(x⊗y) = q^{rs} y⊗x の例）
from src.common.errors import GradingError, InvalidStructureError

from dataclasses import dataclass, field
from itertools import product
import numpy as np


@dataclass(frozen=True)
class GradedAlgebra:
    """
    素体 F_p 上の次数 D までに切り詰めた次数付き代数
        basis : (基底名, 次数) の列
        products : (i, j) -> 係数ベクトル（定義のない積は 0）
        unit : 次数 0 の単位元の基底番号
        q : 組みひもの係数（F_p の 0 でない元）
    """

    name: str
    p: int
    q: int
    D: int
    basis: tuple
    products: dict = field(default_factory=dict)
    unit: int = 0

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
            raise InvalidStructureError(f"{self.name}: p={self.p} は素数ではありません")
        if self.q % self.p == 0:
            raise InvalidStructureError(f"{self.name}: q は 0 でない元です")
        b = len(self.basis)
        tensor = np.zeros((b, b, b), dtype=np.int64)
        for (i, j), vec in self.products.items():
            tensor[i, j] = np.asarray(vec, dtype=np.int64) % self.p
        object.__setattr__(self, "_tensor", tensor)
        self._check()

    @property
    def grades(self) -> np.ndarray:
        return np.asarray([g for _, g in self.basis], dtype=np.int64)

    def index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.basis):
            if n == name:
                return i
        raise GradingError(f"{self.name}: 基底 {name} がありません")

    def vector(self, terms: dict) -> np.ndarray:
        """{基底名: 係数} からベクトルを作る"""
        v = np.zeros(len(self.basis), dtype=np.int64)
        for n, c in terms.items():
            v[self.index(n)] = c % self.p
        return v

    def basis_vector(self, name: str) -> np.ndarray:
        return self.vector({name: 1})

    def mul(self, u, v) -> np.ndarray:
        return np.einsum("i,j,ijk->k", np.asarray(u), np.asarray(v), self._tensor) % self.p

    def _check(self):
        b = len(self.basis)
        grades = self.grades
        eye = np.eye(b, dtype=np.int64)
        if grades[self.unit] != 0:
            raise InvalidStructureError(f"{self.name}: 単位元の次数が 0 ではありません")
        for i, j in product(range(b), repeat=2):
            out = self._tensor[i, j]
            support = np.nonzero(out)[0]
            # 次数は加法的、D を超えたら 0
            if grades[i] + grades[j] > self.D and support.size:
                raise InvalidStructureError(f"{self.name}: 次数 D を超える積 {self.basis[i][0]}*{self.basis[j][0]} が 0 ではありません")
            if any(grades[s] != grades[i] + grades[j] for s in support):
                raise InvalidStructureError(f"{self.name}: 積 {self.basis[i][0]}*{self.basis[j][0]} が次数を保ちません")
        for i in range(b):
            if not (np.array_equal(self.mul(eye[self.unit], eye[i]), eye[i])
                    and np.array_equal(self.mul(eye[i], eye[self.unit]), eye[i])):
                raise InvalidStructureError(f"{self.name}: 単位律が {self.basis[i][0]} で成り立ちません")
        for i, j, k in product(range(b), repeat=3):
            left = self.mul(self.mul(eye[i], eye[j]), eye[k])
            right = self.mul(eye[i], self.mul(eye[j], eye[k]))
            if not np.array_equal(left, right):
                names = ", ".join(self.basis[t][0] for t in (i, j, k))
                raise InvalidStructureError(f"{self.name}: 結合律が ({names}) で成り立ちません")


def _monomial(a: int, b: int) -> str:
    def part(v, e):
        return "" if e == 0 else (v if e == 1 else f"{v}^{e}")

    return (part("x", a) + part("y", b)) or "1"


def quantum_plane(p: int, q: int, D: int) -> GradedAlgebra:
    """
    基底 x^a y^b（a+b ≤ D、|x| = |y| = 1）
    (x^a y^b)(x^c y^d) = q^{bc} x^{a+c} y^{b+d}、したがって y·x = q·xy
    """
    monos = [(a, s - a) for s in range(D + 1) for a in range(s, -1, -1)]
    pos = {m: i for i, m in enumerate(monos)}
    basis = tuple((_monomial(a, b), a + b) for a, b in monos)
    products = {}
    for (a, b), (c, d) in product(monos, repeat=2):
        if a + b + c + d > D:
            continue
        vec = [0] * len(monos)
        vec[pos[(a + c, b + d)]] = pow(q, b * c, p)
        products[(pos[(a, b)], pos[(c, d)])] = tuple(vec)
    return GradedAlgebra(f"qplane_p{p}_q{q}_D{D}", p, q % p, D, basis, products, pos[(0, 0)])


def grade_of(c: GradedAlgebra, v) -> int:
    """斉次元の次数（0 ベクトルは次数 0 とみなす）"""
    support = np.nonzero(np.asarray(v) % c.p)[0]
    if support.size == 0:
        return 0
    grades = set(int(c.grades[i]) for i in support)
    if len(grades) != 1:
        raise GradingError(f"{c.name}: 斉次元ではありません（次数 {sorted(grades)}）")
    return grades.pop()


def graded_q_cospan_commutes(c: GradedAlgebra, f_image, g_image):
    """
    左 : f·g == q^{rs} (g·f)
    右 : g·f == q^{rs} (f·g)
    """
    r, s = grade_of(c, f_image), grade_of(c, g_image)
    if r + s > c.D:
        raise GradingError(f"{c.name}: 次数の和 {r + s} が D={c.D} を超えます")
    fg = c.mul(f_image, g_image)
    gf = c.mul(g_image, f_image)
    factor = pow(c.q, r * s, c.p)
    left = bool(np.array_equal(fg, (factor * gf) % c.p))
    right = bool(np.array_equal(gf, (factor * fg) % c.p))
    return left, right


def homogeneous_basis_pairs(c: GradedAlgebra, max_grade: int):
    """次数 max_grade 以下の基底の組（和が D 以下）"""
    grades = c.grades
    idx = [i for i in range(len(c.basis)) if grades[i] <= max_grade]
    for i, j in product(idx, repeat=2):
        if grades[i] + grades[j] <= c.D:
            yield i, j
