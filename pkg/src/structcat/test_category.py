from src.algebra.monoid import cyclic_group
from src.common.errors import ComposabilityError, InvalidStructureError, ObjectMismatchError
from src.structcat.category import (
    Functor,
    category_from_table,
    composable_pair_category,
    enumerate_functors,
    functor_failure,
    monoid_category,
    product_category,
    terminal_category,
    walking_arrow,
    wide_subcategory,
)

from pytest import raises


def test_walking_arrow():
    c = walking_arrow()
    assert c.arrows == ("f", "id_0", "id_1")
    assert c.hom(0, 1) == ["f"]
    assert c.non_identity_arrows() == ["f"]
    assert c.compose("f", "id_0") == "f"
    with raises(ComposabilityError):
        c.compose("f", "f")


def test_composition_table_is_checked():
    with raises(InvalidStructureError):
        category_from_table("bad", ["a", "b"], {"f": ("a", "b"), "g": ("b", "a")}, {("g", "f"): "f"})
    with raises(InvalidStructureError):
        category_from_table("bad", ["a"], {"f": ("a", "b")}, {})


def test_composable_pair_and_paths():
    c = composable_pair_category()
    assert c.compose_path("h", "f") == "hf"
    assert c.compose_path("id_c", "h", "f", "id_a") == "hf"
    assert len(list(c.composable_triples())) > 0


def test_functor_counts():
    w = walking_arrow()
    assert len(enumerate_functors(w, w)) == 3
    assert len(enumerate_functors(terminal_category(), w)) == 2
    assert len(enumerate_functors(w, terminal_category())) == 1
    assert len(enumerate_functors(w, monoid_category(cyclic_group(2)))) == 2


def test_functor_failure_reasons():
    w = walking_arrow()
    bad = Functor(w, w, {0: 1, 1: 0}, {"f": "f", "id_0": "id_1", "id_1": "id_0"})
    assert functor_failure(bad) == "射 f の像の型が合いません"


def test_monoid_category_and_isos():
    c = monoid_category(cyclic_group(2))
    assert c.objects == ("*",)
    assert c.identity["*"] == "m0"
    assert c.is_iso("m1")


def test_product_category():
    w = walking_arrow()
    p = product_category(w, w)
    assert len(p.objects) == 4 and len(p.arrows) == 9
    assert p.hom((0, 0), (1, 1)) == [("f", "f")]


def test_wide_subcategory():
    c = composable_pair_category()
    sub = wide_subcategory(c, ["f", "id_a", "id_b", "id_c"], "sub")
    assert sub.non_identity_arrows() == ["f"]
    with raises(ObjectMismatchError):
        wide_subcategory(c, ["f"], "sub")
    with raises(InvalidStructureError):
        wide_subcategory(c, ["f", "h", "id_a", "id_b", "id_c"], "sub")
