import numpy as np
import pytest

from conecut import cone_view, cut_edges, initial_tableau, klee_minty, pivot, relative_heights, t_value_table
from conecut.cone import format_table
from conecut.exceptions import InvalidCut

from cases import ex21


def _parallel(u, v):
    u, v = np.asarray(u, float), np.asarray(v, float)
    return abs(u @ v - np.linalg.norm(u) * np.linalg.norm(v)) < 1e-9


def test_cone_view_of_first_pivot():
    view = cone_view(pivot(initial_tableau(ex21()), 0, 0)[0])
    np.testing.assert_allclose(view.edge_matrix, [[1, 0], [-1, 1]])
    np.testing.assert_allclose(view.vertex, [2, 0])
    assert view.strictly_normal


def test_t_values_klee_minty():
    tv = t_value_table(cone_view(initial_tableau(klee_minty(3))))
    np.testing.assert_allclose(tv.entries[:, 0], [100, 5, 0.5])
    assert tv[0, 2] is None and tv[1, 2] is None
    assert tv[2, 2] == 1


def test_relative_heights_klee_minty():
    heights, mask = relative_heights(cone_view(initial_tableau(klee_minty(3))))
    np.testing.assert_allclose(heights[:, 0], [100, 500, 5000])
    assert mask[:, 2].tolist() == [False, False, True]
    assert heights[2, 2] == 10000


def test_relative_heights_keep_only_positive_t():
    view = cone_view(pivot(initial_tableau(ex21()), 0, 0)[0])
    heights, mask = relative_heights(view)
    # y1 column: t = (-2, 2), only the second edge meets it on the real side
    assert mask[:, 2].tolist() == [False, True]
    assert heights[1, 2] == pytest.approx(2.0)


def test_cut_edges_match_pivot():
    view = cone_view(initial_tableau(ex21()))
    edges = cut_edges(view, 0, 0)
    after = pivot(initial_tableau(ex21()), 0, 0)[0].edge_matrix
    for got, want in zip(edges, after):
        assert _parallel(got, want)


def test_cut_edges_rejects_vacancy():
    view = cone_view(initial_tableau(klee_minty(3)))
    with pytest.raises(InvalidCut):
        cut_edges(view, 2, 0)


def test_format_table_mentions_planes():
    text = format_table(initial_tableau(ex21()), "start")
    assert text.splitlines()[0] == "start"
    assert "x1" in text and "y2" in text and "c^" in text
