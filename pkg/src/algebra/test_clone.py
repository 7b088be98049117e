from src.algebra.clone import (
    CommutativeUpTo,
    NotCommutative,
    TabulatedClone,
    admissible_pairs,
    centralizer_clone,
    check_family_naturality,
    clone_centre,
    clone_of_algebra,
    clone_sizes,
    clone_substitute,
    duoid_structure,
    hexagon_agreement,
    is_commutative_clone,
    op_commutes,
    op_commutes_duoidal,
    sigma_tau_families,
    tuple_commutes,
    validate_clone,
)
from src.common.errors import BoundExceededError, CeilingExceededError
from src.corpus.algebras import binary_algebras, negation, pointed_set

import pytest
from pytest import raises


def test_clone_sizes(sl_alg, latt_alg, z2_alg):
    assert clone_sizes(clone_of_algebra(sl_alg, 4)) == [0, 1, 3, 7, 15]
    # 2 元分配束の項演算は単調関数（定数を除く）
    assert clone_sizes(clone_of_algebra(latt_alg, 4)) == [0, 1, 4, 18, 166]
    # F_2 上の線形形式
    assert clone_sizes(clone_of_algebra(z2_alg, 4)) == [1, 2, 4, 8, 16]
    assert clone_sizes(clone_of_algebra(pointed_set(), 3)) == [1, 2, 3, 4]


def test_clone_substitute(sl_alg):
    c = clone_of_algebra(sl_alg, 3)
    join = c.index_of((0, 1, 1, 1), 2)
    x1, x2 = c.unit(0, 2), c.unit(1, 2)
    assert clone_substitute(c, join, 2, [x2, x1], 2) == join
    assert clone_substitute(c, join, 2, [x1, x1], 2) == x1
    # join(x1, join(x2, x3))
    y = [c.unit(i, 3) for i in range(3)]
    inner = clone_substitute(c, join, 2, [y[1], y[2]], 3)
    assert c.table(clone_substitute(c, join, 2, [y[0], inner], 3), 3) == (0, 1, 1, 1, 1, 1, 1, 1)


def test_centralizer_of_or(sl_alg):
    c = centralizer_clone(sl_alg, 2)
    assert clone_sizes(c) == [2, 3, 5]
    assert validate_clone(c).ok


def test_centralizer_ceiling(sl_alg):
    with raises(CeilingExceededError):
        centralizer_clone(sl_alg, 3, ceiling=100)


def test_validate_clone(sl_alg, latt_alg):
    for alg in (sl_alg, latt_alg):
        report = validate_clone(clone_of_algebra(alg, 2))
        assert report.ok, report.failures


def test_validate_clone_finds_seeded_defect(latt_alg):
    table = TabulatedClone.from_clone(clone_of_algebra(latt_alg, 2))
    # π_1(and, or) を or にずらす（単位律の破れ）
    broken = table.with_subst(2, 2, 0, (2, 3), 3)
    report = validate_clone(broken)
    assert "unit_left" in report.failed_laws()


def test_commutative_verdicts(sl_alg, latt_alg, z2_alg):
    assert is_commutative_clone(clone_of_algebra(sl_alg, 4)) == CommutativeUpTo(4)
    assert is_commutative_clone(clone_of_algebra(z2_alg, 4)) == CommutativeUpTo(4)
    verdict = is_commutative_clone(clone_of_algebra(latt_alg, 4))
    assert isinstance(verdict, NotCommutative)
    assert "and" in verdict.witness and "or" in verdict.witness


def test_op_commutes_bound(sl_alg):
    c = clone_of_algebra(sl_alg, 3)
    with raises(BoundExceededError):
        op_commutes(c, 0, 2, 0, 2)


def test_negation_commutes_with_itself_but_not_constants():
    c = clone_of_algebra(negation(), 2)
    neg = c.index_of((1, 0), 1)
    assert op_commutes(c, neg, 1, neg, 1)
    assert tuple_commutes(c, [(neg, 1)], [(neg, 1), (c.unit(0, 1), 1)])


def test_clone_centre_of_commutative_clone_is_everything(sl_alg):
    c = clone_of_algebra(sl_alg, 2)
    centre = clone_centre(c)
    assert [len(centre[n]) for n in range(3)] == clone_sizes(c)


def test_clone_centre_of_lattice_drops_and_or(latt_alg):
    c = clone_of_algebra(latt_alg, 4)
    centre = clone_centre(c)
    # 射影だけが残る
    assert centre[2] == [0, 1]


@pytest.mark.parametrize("name", ["sl", "latt", "z2", "pointed"])
def test_hexagon_agrees_with_interchange(name, sl_alg, latt_alg, z2_alg):
    alg = {"sl": sl_alg, "latt": latt_alg, "z2": z2_alg, "pointed": pointed_set()}[name]
    c = clone_of_algebra(alg, 4)
    for f, n, g, m in admissible_pairs(c):
        assert op_commutes(c, f, n, g, m) == op_commutes_duoidal(c, f, n, g, m)


def test_hexagon_agrees_on_binary_algebras():
    for alg in binary_algebras():
        report = hexagon_agreement(alg, 3)
        assert report.verdict == "pass", (alg.name, report.witnesses)
        assert report.counts["pairs"] > 0


@pytest.mark.slow
def test_hexagon_agrees_on_binary_algebras_up_to_four():
    reports = {alg.name: hexagon_agreement(alg, 4, ceiling=5000) for alg in binary_algebras()}
    # NOR と NAND は T(4) が 2^16 個の関数すべてになる
    unknown = sorted(name for name, r in reports.items() if r.verdict == "unknown")
    assert unknown == ["bin14", "bin8"]
    assert all(reports[name].exhausted == "clone_ceiling=5000" for name in unknown)
    assert all(r.verdict == "pass" for name, r in reports.items() if name not in unknown)


def test_sigma_tau_are_natural(sl_alg):
    c = clone_of_algebra(sl_alg, 2)
    sigma, tau = sigma_tau_families(c)
    assert check_family_naturality(c, sigma).ok
    assert check_family_naturality(c, tau).ok


def test_duoid_structure(sl_alg, latt_alg):
    verdict = duoid_structure(clone_of_algebra(sl_alg, 2))
    assert verdict.is_duoid and verdict.witness is None
    assert verdict.data.report.ok, verdict.data.report.failures
    verdict = duoid_structure(clone_of_algebra(latt_alg, 2))
    assert not verdict.is_duoid
    assert "or" in verdict.witness
