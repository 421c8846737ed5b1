import numpy as np
import pytest

from conecut import feasible_interval, horizontal_optimum, is_dual_feasible, tri_rows
from conecut.cone import cone_view
from conecut.exceptions import ZeroDirection
from conecut.rays import horizontal_edges, tied_leaving_rows
from conecut.tableau import initial_tableau

from cases import ex21, ex51, ex51_after_tie

V = np.array([0, 0, 0, 6, 0.0])
E1 = np.array([1, 0, 0, -2, 0.0])


def test_tri_rows_on_horizontal_edge():
    rows = tri_rows(ex51(), V, E1)
    np.testing.assert_allclose(rows.molecular, [0, -26, -5, 2, -8, 2, 0, 0, 0, -6, 0])
    np.testing.assert_allclose(rows.denominator, [0, -4, -1, 1, -2, 1, 1, 0, 0, -2, 0])
    t = rows.t_vals
    np.testing.assert_allclose(t[[1, 2, 3, 4, 5, 6, 9]], [6.5, 5, 2, 4, 2, 0, 3])
    assert not rows.defined[[0, 7, 8, 10]].any()


def test_interval_on_horizontal_edge():
    iv = feasible_interval(tri_rows(ex51(), V, E1), V, E1)
    assert (iv.t_a, iv.t_b) == (2, 3)
    np.testing.assert_allclose(iv.q_a, [2, 0, 0, 2, 0])
    np.testing.assert_allclose(iv.q_b, [3, 0, 0, 0, 0])
    np.testing.assert_allclose(iv.point(2.5), [2.5, 0, 0, 1, 0])


def test_flat_violation_means_no_interval():
    p = ex21()
    # direction orthogonal to column x1 while x1 is violated
    assert feasible_interval(tri_rows(p, [0, 0], [1, -1]), [0, 0], [1, -1]) is None


def test_empty_when_bounds_cross():
    p = ex21()
    start = np.array([0.0, 0.0])
    d = np.array([-1.0, -1.0])
    assert feasible_interval(tri_rows(p, start, d), start, d) is None


def test_unbounded_interval():
    p = ex21()
    iv = feasible_interval(tri_rows(p, [0, 0], [1, 2]), [0, 0], [1, 2])
    assert not iv.bounded and iv.q_b is None
    assert iv.t_a == pytest.approx(1.0)


def test_zero_direction():
    with pytest.raises(ZeroDirection):
        tri_rows(ex21(), [0, 0], [0, 0])


def test_dual_feasibility():
    assert is_dual_feasible(ex21(), [0.5, 1.5])
    assert not is_dual_feasible(ex21(), [1.5, 0.5])
    assert not is_dual_feasible(ex21(), [3, -0.1])


def test_tie_predicts_horizontal_edge():
    view = cone_view(initial_tableau(ex51()))
    assert tied_leaving_rows(view, 0) == [0, 3]
    after = cone_view(ex51_after_tie())
    assert horizontal_edges(after) == [0]


def test_horizontal_optimum_after_tie():
    iv = horizontal_optimum(ex51_after_tie(), 0)
    np.testing.assert_allclose(iv.q_a, [2, 0, 0, 2, 0])
    np.testing.assert_allclose(iv.q_b, [3, 0, 0, 0, 0])


def test_horizontal_optimum_rejects_sloped_edge():
    with pytest.raises(ValueError):
        horizontal_optimum(ex51_after_tie(), 1)
