from src.algebra.model import FiniteModel
from src.common.errors import InputError
from src.operad.presentation import (
    Leaf,
    Node,
    OperadPresentation,
    Relation,
    ass_presentation,
    bv_tensor_presentation,
    com_presentation,
    enumerate_operad_algebras,
    interchanging_algebra_pairs,
    to_presentation,
    trivial_presentation,
)

from itertools import product

import pytest
from pytest import raises

CORPUS = [
    ass_presentation(),
    ass_presentation(unital=True),
    com_presentation(unital=False),
    com_presentation(),
    trivial_presentation(),
]


def test_relation_rendering():
    swap = com_presentation().relations[-1]
    assert str(swap) == "m(1,2) = m(1,2) . perm(2,1)"
    assert str(to_presentation(com_presentation()).equations[-1]) == "m(x1,x2) = m(x2,x1)"


def test_relation_leaves_must_be_a_permutation():
    with raises(InputError):
        OperadPresentation("bad", {"m": 2}, (Relation(Node("m", (Leaf(0), Leaf(0))), Leaf(0), 2),))
    with raises(InputError):
        OperadPresentation("bad", {"m": 2}, (Relation(Node("n", (Leaf(0), Leaf(1))), Leaf(0), 2),))


def test_algebra_counts_on_two_elements():
    assert len(enumerate_operad_algebras(ass_presentation(), 2)) == 8
    assert len(enumerate_operad_algebras(ass_presentation(unital=True), 2)) == 4
    assert len(enumerate_operad_algebras(com_presentation(), 2)) == 4
    assert len(enumerate_operad_algebras(trivial_presentation(), 3)) == 1


def test_bv_tensor_generators_and_relations():
    p = bv_tensor_presentation(ass_presentation(unital=True), ass_presentation(unital=True))
    assert p.generators == {"m_1": 2, "e_1": 0, "m_2": 2, "e_2": 0}
    # 3 + 3 個の関係と生成元の組 4 つ
    assert len(p.relations) == 10
    assert "m_1(m_2(1,2),m_2(3,4)) = m_2(m_1(1,2),m_1(3,4)) . perm(1,3,2,4)" in [str(r) for r in p.relations]


def test_eckmann_hilton():
    p = bv_tensor_presentation(ass_presentation(unital=True), ass_presentation(unital=True))
    algebras = enumerate_operad_algebras(p, 2)
    assert len(algebras) == 4
    for a in algebras:
        assert a.table("m_1") == a.table("m_2")
        m = a.table("m_1")
        assert all(m[x * 2 + y] == m[y * 2 + x] for x in range(2) for y in range(2))
    pairs = interchanging_algebra_pairs(ass_presentation(unital=True), ass_presentation(unital=True), 2)
    assert len(pairs) == 4
    assert all(a.table("m") == b.table("m") for a, b in pairs)
    assert all(isinstance(a.model, FiniteModel) for a, _ in pairs)


def _count_identity(p1, p2, k):
    tensor = enumerate_operad_algebras(bv_tensor_presentation(p1, p2), k)
    assert len(tensor) == len(interchanging_algebra_pairs(p1, p2, k))


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("p1, p2", list(product(CORPUS, repeat=2)), ids=lambda p: p.name)
def test_bv_algebra_count_matches_interchanging_pairs(p1, p2, k):
    _count_identity(p1, p2, k)


@pytest.mark.slow
@pytest.mark.parametrize("p1, p2", list(product(CORPUS, repeat=2)), ids=lambda p: p.name)
def test_bv_algebra_count_matches_interchanging_pairs_on_three(p1, p2):
    _count_identity(p1, p2, 3)


@pytest.mark.parametrize("p", CORPUS, ids=lambda p: p.name)
def test_bv_with_trivial_is_unchanged(p):
    for q in (bv_tensor_presentation(p, trivial_presentation()), bv_tensor_presentation(trivial_presentation(), p)):
        assert q.generators == p.generators
        assert [str(r) for r in q.relations] == [str(r) for r in p.relations]
        for k in range(3):
            assert len(enumerate_operad_algebras(q, k)) == len(enumerate_operad_algebras(p, k))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_com_bv_com_has_as_many_algebras_as_com(k):
    com = com_presentation()
    assert len(enumerate_operad_algebras(bv_tensor_presentation(com, com), k)) == len(
        enumerate_operad_algebras(com, k)
    )
