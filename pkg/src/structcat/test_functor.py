from src.algebra.monoid import cyclic_group
from src.common.errors import ObjectMismatchError
from src.structcat.category import Functor, monoid_category, product_category, walking_arrow
from src.structcat.functor import (
    BifunctorVerdict,
    SesquiFunctor,
    bifunctor_check,
    compose_after,
    factor_through_product,
    family_count,
    functor_hom,
    functor_objects,
    restrict_functor,
    universal_sesquifunctor,
)
from src.structcat.funny import comparison_functor, funny_tensor

from pytest import raises


def _identity_functor(C):
    return Functor(C, C, {x: x for x in C.objects}, {f: f for f in C.arrows})


def test_universal_sesquifunctor_is_not_a_bifunctor():
    w = walking_arrow()
    V, target = universal_sesquifunctor(funny_tensor(w, w))
    assert V.on_objects(0, 1) == (0, 1)
    assert bifunctor_check(V) == BifunctorVerdict(False, ("f", "f"))
    assert factor_through_product(V) is None


def test_restriction_of_product_functor_is_a_bifunctor():
    w = walking_arrow()
    p = product_category(w, w)
    T = restrict_functor(_identity_functor(p), w, w)
    assert bifunctor_check(T).is_bifunctor
    F = factor_through_product(T)
    assert F is not None
    assert F(("f", "f")) == ("f", "f")


def test_comparison_after_universal_is_a_bifunctor():
    w = walking_arrow()
    t = funny_tensor(w, w)
    V, _ = universal_sesquifunctor(t)
    assert bifunctor_check(compose_after(comparison_functor(t), V)) == BifunctorVerdict(True)


def test_sesquifunctor_objects_must_agree():
    w = walking_arrow()
    p = product_category(w, w)
    T = restrict_functor(_identity_functor(p), w, w)
    rows = dict(T.rows)
    rows[0] = T.rows[1]
    with raises(ObjectMismatchError):
        SesquiFunctor(w, w, p, rows, T.cols)


def test_functor_categories():
    w, z2 = walking_arrow(), monoid_category(cyclic_group(2))
    functors = functor_objects(w, z2)
    assert list(functors) == ["F0", "F1"]
    fam = functor_hom(w, z2, natural=False)
    nat = functor_hom(w, z2, natural=True)
    assert len(fam.arrows) == 16
    # Z/2 は可換なので成分 c_0 が c_1 を決める
    assert len(nat.arrows) == 8
    assert family_count(w, z2, functors["F0"], functors["F1"]) == 4
