from src.algebra.graded import (
    GradedAlgebra,
    grade_of,
    graded_q_cospan_commutes,
    homogeneous_basis_pairs,
    quantum_plane,
)
from src.common.errors import GradingError, InvalidStructureError

import numpy as np
import pytest
from pytest import raises


def test_quantum_plane_relation():
    c = quantum_plane(5, 2, 2)
    x, y = c.basis_vector("x"), c.basis_vector("y")
    assert np.array_equal(c.mul(y, x), c.vector({"xy": 2}))
    assert grade_of(c, c.mul(x, y)) == 2
    assert len(c.basis) == 6


def test_generator_pair_is_asymmetric():
    c = quantum_plane(5, 2, 2)
    x, y = c.basis_vector("x"), c.basis_vector("y")
    left, right = graded_q_cospan_commutes(c, x, y)
    assert (left, right) == (False, True)


def test_left_and_right_swap_on_homogeneous_pairs():
    c = quantum_plane(5, 2, 2)
    eye = np.eye(len(c.basis), dtype=np.int64)
    pairs = list(homogeneous_basis_pairs(c, 2))
    assert pairs
    for i, j in pairs:
        left, _ = graded_q_cospan_commutes(c, eye[i], eye[j])
        _, right = graded_q_cospan_commutes(c, eye[j], eye[i])
        assert left == right


@pytest.mark.parametrize("q", [1, 4])
def test_symmetric_braiding_is_two_sided(q):
    # q = ±1 では左右が一致する
    c = quantum_plane(5, q, 2)
    x, y = c.basis_vector("x"), c.basis_vector("y")
    assert graded_q_cospan_commutes(c, x, y) == (True, True)


def test_grading_errors():
    c = quantum_plane(5, 2, 2)
    with raises(GradingError):
        grade_of(c, c.vector({"1": 1, "x": 1}))
    with raises(GradingError):
        graded_q_cospan_commutes(c, c.basis_vector("x^2"), c.basis_vector("y"))
    with raises(GradingError):
        c.index("z")


def test_invalid_graded_algebra():
    with raises(InvalidStructureError):
        quantum_plane(4, 2, 2)
    with raises(InvalidStructureError):
        quantum_plane(5, 5, 2)
    # 積が次数を保たない
    with raises(InvalidStructureError):
        GradedAlgebra("bad", 3, 1, 2, (("1", 0), ("x", 1)), {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (0, 1), (1, 1): (1, 0)})
