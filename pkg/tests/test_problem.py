import numpy as np
import pytest

from conecut import LID, extended_column, extended_cost, new_problem
from conecut.exceptions import DimensionMismatch, IndexOutOfRange, NegativeTarget, NonFinite

from cases import ex21


def test_valid_problem_shapes():
    p = ex21()
    assert (p.m, p.n, p.n_planes) == (2, 2, 4)
    np.testing.assert_array_equal(p.a_plus, [[1, -1, 1, 0], [1, 1, 0, 1]])
    np.testing.assert_array_equal(p.c_plus, [2, 1, 0, 0])


def test_arrays_are_read_only():
    p = ex21()
    with pytest.raises(ValueError):
        p.a_matrix[0, 0] = 5.0


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        new_problem([[1, 2]], [1, 2], [1, 1])
    with pytest.raises(DimensionMismatch):
        new_problem([[1, 2]], [1], [1, 1, 1])


def test_non_finite():
    with pytest.raises(NonFinite):
        new_problem([[np.nan, 1]], [1], [1, 1])
    with pytest.raises(NonFinite):
        new_problem([[1, 1]], [np.inf], [1, 1])


def test_negative_target_reports_index():
    with pytest.raises(NegativeTarget) as info:
        new_problem([[1], [1], [1]], [1, -2, -3], [1])
    assert info.value.index == 1


def test_extended_columns():
    p = ex21()
    np.testing.assert_array_equal(extended_column(p, 0), [1, 1])
    np.testing.assert_array_equal(extended_column(p, 2), [1, 0])
    np.testing.assert_array_equal(extended_column(p, LID), [-1, -2])
    with pytest.raises(IndexOutOfRange):
        extended_column(p, 4)


def test_extended_costs():
    p = ex21()
    assert extended_cost(p, 0) == 2
    assert extended_cost(p, 3) == 0
    assert extended_cost(p, LID, u=7) == -7


def test_plane_names_and_equality():
    p = ex21()
    assert [p.plane_name(j) for j in range(4)] == ["x1", "x2", "y1", "y2"]
    assert p == ex21() and hash(p) == hash(ex21())
