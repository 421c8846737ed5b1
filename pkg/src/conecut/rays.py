"""Feasible intervals on rays through the dual space and horizontal edges.

Ray quantities are always computed from the original extended data
``(A+, c+)``, never from transformed tableau columns.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import EPS, as_vector
from .exceptions import ZeroDirection
from .tableau import vertex


@dataclass(frozen=True)
class TriRows:
    molecular: np.ndarray
    denominator: np.ndarray
    t_vals: np.ndarray
    defined: np.ndarray
    m_tol: np.ndarray
    d_tol: np.ndarray


@dataclass(frozen=True)
class FeasibleInterval:
    t_a: float
    t_b: float
    q_a: np.ndarray
    q_b: np.ndarray  # None when the interval is unbounded above

    @property
    def bounded(self):
        return np.isfinite(self.t_b)

    def point(self, t):
        direction = (self.q_b - self.q_a) / (self.t_b - self.t_a) if self.t_b > self.t_a else 0.0
        return self.q_a + (t - self.t_a) * direction


def tri_rows(problem, point, direction, eps=EPS):
    """Molecular, denominator and t-value rows of the ray ``point + t*direction``."""
    m = problem.m
    p = as_vector(point, m, "point")
    d = as_vector(direction, m, "direction")
    if not np.max(np.abs(d)) > 0:
        raise ZeroDirection("ray direction is the zero vector")
    a_plus = problem.a_plus
    norms = np.sum(np.abs(a_plus), axis=0)
    molecular = problem.c_plus - p @ a_plus
    denominator = d @ a_plus
    m_tol = eps * (1.0 + np.max(np.abs(p)) * norms + np.abs(problem.c_plus))
    d_tol = eps * (1.0 + np.max(np.abs(d)) * norms)
    defined = np.abs(denominator) > d_tol
    t_vals = np.zeros_like(molecular)
    np.divide(molecular, denominator, out=t_vals, where=defined)
    return TriRows(molecular, denominator, t_vals, defined, m_tol, d_tol)


def feasible_interval(rows, point, direction, eps=EPS):
    """Portion ``t >= 0`` of the ray inside the dual feasible region, or None."""
    p = np.asarray(point, dtype=float)
    d = np.asarray(direction, dtype=float)
    flat = ~rows.defined
    if np.any(flat & (rows.molecular > rows.m_tol)):
        return None
    up = rows.defined & (rows.denominator > 0)
    down = rows.defined & (rows.denominator < 0)
    t_a = float(np.max(rows.t_vals[up])) if up.any() else -np.inf
    t_b = float(np.min(rows.t_vals[down])) if down.any() else np.inf
    t_a = max(t_a, 0.0)
    if t_a > t_b:
        if t_a - t_b > eps * (1.0 + abs(t_a)):
            return None
        t_b = t_a
    q_b = p + t_b * d if np.isfinite(t_b) else None
    return FeasibleInterval(t_a, t_b, p + t_a * d, q_b)


def is_dual_feasible(problem, point, eps=EPS):
    """``y A >= c`` and ``y >= 0`` up to a scaled tolerance."""
    y = np.asarray(point, dtype=float)
    slack = y @ problem.a_plus - problem.c_plus
    tol = eps * (1.0 + np.max(np.abs(y)) * np.sum(np.abs(problem.a_plus), axis=0)
                 + np.abs(problem.c_plus))
    return bool(np.all(slack >= -tol * 10))


def horizontal_edges(view):
    """Rows whose edge slope is zero."""
    return [int(i) for i in np.flatnonzero(np.abs(view.slopes) <= view.eps)]


def tied_leaving_rows(view, j):
    """Rows tying in the ratio test of column ``j``.

    More than one row means a pivot in column ``j`` leaves a horizontal edge.
    """
    col = view.body[:, j]
    rows = np.flatnonzero(col > view.eps)
    if rows.size == 0:
        return []
    ratios = view.slopes[rows] / col[rows]
    best = np.min(ratios)
    return [int(i) for i in rows[ratios <= best + view.eps * (1.0 + abs(best))]]


def horizontal_optimum(tableau, row, eps=EPS):
    """Feasible interval on horizontal edge ``row`` starting at the vertex.

    Every point of a returned interval is dual optimal with value ``h(V)``.
    """
    if abs(tableau.rhs[row]) > eps:
        raise ValueError(f"edge {row} is not horizontal (slope {tableau.rhs[row]!r})")
    problem = tableau.problem
    v = vertex(tableau)
    d = tableau.edge_matrix[row].copy()
    rows = tri_rows(problem, v, d, eps)
    return feasible_interval(rows, v, d, eps)
