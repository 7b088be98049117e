# 組み込みの有限代数（2 元集合上の代表例）
from src.algebra.clone import FiniteAlgebra
from src.algebra.term import Signature

from itertools import product


def _algebra(name, k, ops: dict, tables: dict) -> FiniteAlgebra:
    return FiniteAlgebra(name, k, Signature(name, ops), tables)


def semilattice_or() -> FiniteAlgebra:
    """({0,1}, ∨)"""
    return _algebra("sl_or", 2, {"join": 2}, {"join": (0, 1, 1, 1)})


def and_or_lattice() -> FiniteAlgebra:
    """2 元束（∧ と ∨ は可換にならない）"""
    return _algebra("latt", 2, {"and": 2, "or": 2}, {"and": (0, 0, 0, 1), "or": (0, 1, 1, 1)})


def z2_module() -> FiniteAlgebra:
    """F_2 上のベクトル空間としての {0,1}（x+y と 0）"""
    return _algebra("z2", 2, {"add": 2, "zero": 0}, {"add": (0, 1, 1, 0), "zero": (0,)})


def pointed_set() -> FiniteAlgebra:
    return _algebra("pointed", 2, {"c": 0}, {"c": (0,)})


def one_element() -> FiniteAlgebra:
    return _algebra("one", 1, {"mul": 2}, {"mul": (0,)})


def negation() -> FiniteAlgebra:
    return _algebra("not", 2, {"neg": 1}, {"neg": (1, 0)})


def binary_algebras() -> list:
    """2 元集合上の二項演算 1 つの代数すべて（表の辞書式順、名前 bin0..bin15）"""
    return [
        _algebra(f"bin{i}", 2, {"op": 2}, {"op": table})
        for i, table in enumerate(product(range(2), repeat=4))
    ]


def builtin_algebras() -> dict:
    """名前 -> 代数（受け入れ検査の対象一覧）"""
    out = {a.name: a for a in (semilattice_or(), and_or_lattice(), z2_module(), pointed_set(), one_element(), negation())}
    out.update({a.name: a for a in binary_algebras()})
    return out
