# 有限集合上の演算表（行優先、第 1 引数が最上位桁）
from src.common.errors import ArityError

from itertools import product
import numpy as np


def all_tuples(k: int, n: int) -> np.ndarray:
    """carrier^n の全要素を行優先順で並べた (k^n, n) 配列"""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    if k == 0:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(list(product(range(k), repeat=n)), dtype=np.int64)


def encode(columns: np.ndarray, k: int) -> np.ndarray:
    """(rows, n) の引数列を表のインデックスに変換"""
    n = columns.shape[1]
    idx = np.zeros(columns.shape[0], dtype=np.int64)
    for c in range(n):
        idx = idx * k + columns[:, c]
    return idx


def check_table(table, k: int, n: int, name: str = "op") -> tuple:
    table = tuple(int(v) for v in table)
    if len(table) != k**n:
        raise ArityError(f"{name}/{n} の表の長さは {k**n} である必要があります (got {len(table)})")
    if any(not 0 <= v < k for v in table):
        raise ArityError(f"{name}/{n} の表に 0..{k - 1} 以外の値があります")
    return table


def apply_table(table, k: int, args) -> int:
    """1 点での評価"""
    idx = 0
    for a in args:
        idx = idx * k + a
    return table[idx]


def compose_tables(f, n: int, gs, m: int, k: int) -> tuple:
    """f(g_1, ..., g_n) を m 変数の表として返す"""
    f_arr = np.asarray(f, dtype=np.int64)
    if n == 0:
        return tuple(int(f_arr[0]) for _ in range(k**m))
    cols = np.stack([np.asarray(g, dtype=np.int64) for g in gs], axis=1)
    return tuple(int(v) for v in f_arr[encode(cols, k)])


def rename_table(f, n: int, u, m: int, k: int) -> tuple:
    """T(u)(f): 変数 i を u(i) に付け替えた m 変数の表"""
    xs = all_tuples(k, m)
    f_arr = np.asarray(f, dtype=np.int64)
    if n == 0:
        return tuple(int(f_arr[0]) for _ in range(k**m))
    cols = xs[:, list(u)]
    return tuple(int(v) for v in f_arr[encode(cols, k)])


def projection_table(i: int, n: int, k: int) -> tuple:
    xs = all_tuples(k, n)
    return tuple(int(v) for v in xs[:, i])


def _commutation_sides(f, n: int, g, m: int, k: int):
    """
    x_{ij} を行優先に並べた全割り当てについて
        左辺 = f(g(x_{i1..im}) for i)
        右辺 = g(f(x_{1j..nj}) for j)
    を計算する
    """
    rows = k ** (n * m)
    xs = all_tuples(k, n * m).reshape(rows, n, m)
    f_arr = np.asarray(f, dtype=np.int64)
    g_arr = np.asarray(g, dtype=np.int64)
    if n == 0:
        lhs = np.full(rows, f_arr[0])
    else:
        g_rows = np.stack([g_arr[encode(xs[:, i, :], k)] for i in range(n)], axis=1)
        lhs = f_arr[encode(g_rows, k)]
    if m == 0:
        rhs = np.full(rows, g_arr[0])
    else:
        f_cols = np.stack([f_arr[encode(xs[:, :, j], k)] for j in range(m)], axis=1)
        rhs = g_arr[encode(f_cols, k)]
    return xs.reshape(rows, n * m), lhs, rhs


def functions_commute(f, n: int, g, m: int, k: int) -> bool:
    """具体的な関数として f と g が可換か"""
    _, lhs, rhs = _commutation_sides(f, n, g, m, k)
    return bool(np.array_equal(lhs, rhs))


def commutation_witness(f, n: int, g, m: int, k: int):
    """
    左辺と右辺が異なる最初の割り当て（行優先の x_{ij} のタプル）
    可換なら None
    """
    xs, lhs, rhs = _commutation_sides(f, n, g, m, k)
    bad = np.nonzero(lhs != rhs)[0]
    if bad.size == 0:
        return None
    row = int(bad[0])
    return tuple(int(v) for v in xs[row]), int(lhs[row]), int(rhs[row])
