from src.algebra.monoid import (
    FiniteMonoid,
    MonoidMap,
    cospan_witness,
    cyclic_group,
    enumerate_monoid_homs,
    factorization,
    find_isomorphism,
    identity_map,
    image_within,
    is_commutative_monoid,
    monoid_centralizer,
    monoid_centre,
    monoid_cospan_commutes,
    monoid_tensor_universal_check,
    monoids_up_to_iso,
    product_monoid,
    trivial_monoid,
)
from src.common.errors import CodomainMismatchError, InvalidStructureError

from itertools import product

import pytest
from pytest import raises

# 左零半群に単位元を足したもの: a*x = a, b*x = b
LEFT_ZERO = FiniteMonoid("lz", 3, (0, 1, 2, 1, 1, 1, 2, 2, 2), 0)


def test_monoid_validation():
    with raises(InvalidStructureError):
        FiniteMonoid("bad", 2, (0, 1, 1, 1), 1)
    with raises(InvalidStructureError):
        FiniteMonoid("bad", 2, (0, 1, 1), 0)
    with raises(InvalidStructureError):
        MonoidMap(cyclic_group(2), cyclic_group(2), (1, 0))


def test_monoids_up_to_iso():
    assert [len(monoids_up_to_iso(k)) for k in range(5)] == [0, 1, 2, 7, 35]
    # 3 元で非可換なのは左零・右零に単位元を足した 2 つ
    assert sum(not is_commutative_monoid(m) for m in monoids_up_to_iso(3)) == 2


def test_monoid_representatives_are_pairwise_non_isomorphic():
    for k in range(1, 5):
        reps = monoids_up_to_iso(k)
        assert all(m.unit == 0 for m in reps)
        for i, a in enumerate(reps):
            assert all(find_isomorphism(a, b) is None for b in reps[i + 1 :])
    # 代表のどれかと同型になる
    assert any(find_isomorphism(LEFT_ZERO, m) is not None for m in monoids_up_to_iso(3))
    assert find_isomorphism(cyclic_group(4), product_monoid(cyclic_group(2), cyclic_group(2))) is None


@pytest.mark.slow
def test_monoids_of_order_five_and_six():
    assert len(monoids_up_to_iso(5)) == 228
    assert len(monoids_up_to_iso(6)) == 2237


def test_cospan_commutation_and_witness():
    z2 = cyclic_group(2)
    i = identity_map(LEFT_ZERO)
    assert not monoid_cospan_commutes(i, i)
    assert cospan_witness(i, i) == (1, 2)
    homs = enumerate_monoid_homs(z2, LEFT_ZERO)
    # 位数 2 の元がないので自明な写像だけ
    assert [h.values for h in homs] == [(0, 0)]
    assert monoid_cospan_commutes(homs[0], i)


def test_cospan_codomain_mismatch():
    with raises(CodomainMismatchError):
        cospan_witness(identity_map(cyclic_group(2)), identity_map(cyclic_group(3)))


def test_centre():
    assert monoid_centre(LEFT_ZERO).elements == (0,)
    assert monoid_centre(cyclic_group(3)).elements == (0, 1, 2)


def _cospans(bound):
    monoids = [m for k in range(1, bound + 1) for m in monoids_up_to_iso(k)]
    for a, b, c in product(monoids, repeat=3):
        for f in enumerate_monoid_homs(a, c):
            for g in enumerate_monoid_homs(b, c):
                yield f, g


def _centralizer_equivalence(bound):
    for f, g in _cospans(bound):
        commutes = monoid_cospan_commutes(f, g)
        assert image_within(g, monoid_centralizer(f)) == commutes
        assert image_within(f, monoid_centralizer(g)) == commutes


def test_centralizer_equivalence():
    _centralizer_equivalence(3)


@pytest.mark.slow
def test_centralizer_equivalence_up_to_four():
    _centralizer_equivalence(4)


def test_product_and_factorization():
    z2, z3 = cyclic_group(2), cyclic_group(3)
    p = product_monoid(z2, z3)
    assert p.k == 6 and is_commutative_monoid(p)
    z6 = cyclic_group(6)
    f = MonoidMap(z2, z6, (0, 3))
    g = MonoidMap(z3, z6, (0, 2, 4))
    h = factorization(z2, z3, f, g)
    # (1, 1) -> 3 + 2
    assert h(1 * 3 + 1) == 5
    with raises(InvalidStructureError):
        factorization(LEFT_ZERO, LEFT_ZERO, identity_map(LEFT_ZERO), identity_map(LEFT_ZERO))


def test_tensor_universal_property_small():
    monoids = [m for k in range(1, 3) for m in monoids_up_to_iso(k)]
    for a, b in product(monoids, repeat=2):
        report = monoid_tensor_universal_check(a, b, 3)
        assert report.verdict == "pass", report.witnesses
    report = monoid_tensor_universal_check(cyclic_group(2), trivial_monoid(), 2, probes=[LEFT_ZERO])
    assert report.counts["probes"] == 4


@pytest.mark.slow
def test_tensor_universal_property():
    monoids = [m for k in range(1, 4) for m in monoids_up_to_iso(k)]
    for a, b in product(monoids, repeat=2):
        report = monoid_tensor_universal_check(a, b, 4)
        assert report.verdict == "pass", report.witnesses


@pytest.mark.slow
def test_tensor_of_z2_and_z3_is_z6():
    z2, z3, z6 = cyclic_group(2), cyclic_group(3), cyclic_group(6)
    report = monoid_tensor_universal_check(z2, z3, 6)
    assert report.verdict == "pass", report.witnesses
    assert report.counts["probes"] == 1 + 2 + 7 + 35 + 228 + 2237
    # 入射の余スパンは Z/6 に着地する
    p = product_monoid(z2, z3)
    iso = find_isomorphism(p, z6)
    assert iso is not None
    left = MonoidMap(z2, z6, tuple(iso(x * 3) for x in range(2)))
    right = MonoidMap(z3, z6, tuple(iso(y) for y in range(3)))
    assert left.values == (0, 3) and set(right.values) == {0, 2, 4}
    assert monoid_cospan_commutes(left, right)


def test_universal_check_runs_in_worker_processes(monkeypatch):
    monkeypatch.setattr("src.common.settings.THREADS", 2)
    report = monoid_tensor_universal_check(cyclic_group(2), cyclic_group(2), 3, probes=[LEFT_ZERO])
    assert report.verdict == "pass"
    assert report.counts["probes"] == 1 + 2 + 7 + 1
