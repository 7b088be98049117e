from src.algebra.monoid import cyclic_group
from src.common.errors import ComposabilityError
from src.structcat.category import is_functor, monoid_category, walking_arrow
from src.structcat.funny import (
    LEFT,
    RIGHT,
    Letter,
    comparison_functor,
    compare_with_product,
    funny_tensor,
    generator_squares_commute,
)

from pytest import raises


def test_funny_hom_vs_product():
    t = funny_tensor(walking_arrow(), walking_arrow())
    assert compare_with_product(t, (0, 0), (1, 1)) == (2, 1, False)
    assert compare_with_product(t, (0, 0), (1, 0)) == (1, 1, False)


def test_generator_square_does_not_commute():
    t = funny_tensor(walking_arrow(), walking_arrow())
    assert not generator_squares_commute(t)
    one = t.compose(t.right_generator(1, "f"), t.left_generator("f", 0))
    assert str(one) == "(f,0) ; (1,f)"


def test_rewriting_is_locally_confluent():
    assert funny_tensor(walking_arrow(), walking_arrow()).confluence_witness(4) is None
    z2 = monoid_category(cyclic_group(2))
    assert funny_tensor(z2, walking_arrow()).confluence_witness(4) is None


def test_reduction_merges_and_drops_identities():
    z2 = monoid_category(cyclic_group(2))
    t = funny_tensor(z2, z2)
    m1 = Letter(LEFT, "m1", "*")
    word = (m1, Letter(RIGHT, "m0", "*"), m1)
    assert t.reduce(word) == ()
    assert t.arrow(("*", "*"), word) == t.identity(("*", "*"))


def test_bad_word():
    t = funny_tensor(walking_arrow(), walking_arrow())
    with raises(ComposabilityError):
        t.arrow((0, 0), (Letter(LEFT, "f", 0), Letter(LEFT, "f", 0)))


def test_finite_funny_tensor_and_comparison():
    t = funny_tensor(walking_arrow(), walking_arrow())
    c = t.to_finite_category()
    assert len(c.arrows) == 10
    F = comparison_functor(t)
    assert is_functor(F)


def test_infinite_hom_is_truncated():
    z2 = monoid_category(cyclic_group(2))
    t = funny_tensor(z2, z2)
    enum = t.hom(("*", "*"), ("*", "*"), 3)
    # 交互の語: 長さ 0 が 1 本、長さ 1..3 が 2 本ずつ
    assert len(enum.arrows) == 7
    assert enum.truncated
    with raises(ComposabilityError):
        t.to_finite_category(3)
