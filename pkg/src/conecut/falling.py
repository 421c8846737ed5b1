"""Horizontal feasible outline, central falling and weighted falling.

A feasible point ``F`` falls along ``-b`` until it hits the boundary of the
dual feasible region (its foot).  Central falling first moves ``F``
horizontally to the center of an outline of feasible points on the lid
through ``F`` and lets the center fall instead.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ._validation import EPS, as_vector
from .exceptions import (DegenerateWeights, DualUnboundedBelow, NotFeasible,
                         NotStrictlyNormal, ZeroDirection)
from .problem import LID
from .rays import feasible_interval, is_dual_feasible, tri_rows
from .tableau import attach_lid, height, pivot, vertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Outline:
    points: list
    center: np.ndarray
    u: float


@dataclass(frozen=True)
class FallResult:
    start: np.ndarray
    foot: np.ndarray
    t_land: float
    height_drop: float
    blocking_plane: object


@dataclass(frozen=True)
class FallStep:
    """One central-falling iteration."""

    iteration: int
    center: np.ndarray
    fall: FallResult
    start_height: float
    foot_height: float
    vertex_height: float

    @property
    def effectiveness(self):
        gap = self.start_height - self.vertex_height
        return (self.start_height - self.foot_height) / gap if gap > 0 else 0.0


def _require_feasible(problem, point, eps):
    y = as_vector(point, problem.m, "feasible point")
    if not is_dual_feasible(problem, y, eps):
        raise NotFeasible("point violates y A >= c or y >= 0")
    return y


def _first_point_toward(problem, start, target, eps):
    d = target - start
    if not np.max(np.abs(d)) > eps * (1.0 + np.max(np.abs(target))):
        return target.copy()
    iv = feasible_interval(tri_rows(problem, start, d, eps), start, d, eps)
    if iv is None or iv.t_a > 1.0:
        return target.copy()
    return iv.q_a


def outline(tableau, point, eps=EPS):
    """Horizontal feasible outline of ``point`` on the lid through it.

    For a row with a nonzero lid coefficient the cover vertex ``V_i`` comes
    from pivoting the lid into that row of a copy; ``F_i`` is the first
    feasible point on the ray from ``V_i`` to ``point``.  A horizontal edge
    never reaches the lid, so its cover vertex sits at infinity along
    ``e*_i`` and ``F_i`` is the farthest feasible point from ``point`` in that
    direction.
    """
    problem = tableau.problem
    f = _require_feasible(problem, point, eps)
    if np.any(tableau.rhs < -eps):
        raise NotStrictlyNormal("cone has an edge sloping downwards")
    u = float(f @ problem.b_vec)
    if not tableau.has_lid or abs(tableau.u_value - u) > eps * (1.0 + abs(u)):
        tableau = attach_lid(tableau, u, eps)
    lid = tableau.col(LID)
    points = []
    for i in range(tableau.m):
        if abs(tableau.body[i, lid]) > eps:
            cover, _ = pivot(tableau, i, LID, eps)
            points.append(_first_point_toward(problem, vertex(cover), f, eps))
            continue
        e = tableau.edge_matrix[i].copy()
        try:
            iv = feasible_interval(tri_rows(problem, f, e, eps), f, e, eps)
        except ZeroDirection:
            iv = None
        points.append(iv.q_b.copy() if iv is not None and iv.bounded else f.copy())
    center = np.mean(points, axis=0)
    return Outline(points, center, u)


def _landing(problem, point, eps):
    rows = tri_rows(problem, point, -np.asarray(problem.b_vec), eps)
    down = rows.defined & (rows.denominator < 0)
    t = np.where(down, np.maximum(rows.t_vals, 0.0), np.inf)
    return rows, down, t


def foot(problem, point, eps=EPS):
    """Fall from a feasible point along ``-b`` to the boundary."""
    f = _require_feasible(problem, point, eps)
    b = np.asarray(problem.b_vec)
    if not np.any(b > 0):
        return FallResult(f, f.copy(), 0.0, 0.0, None)
    _, down, t = _landing(problem, f, eps)
    if not down.any():
        raise DualUnboundedBelow("no constraint blocks the falling ray")
    j = int(np.argmin(t))
    t_land = float(t[j])
    return FallResult(f, f - t_land * b, t_land, t_land * float(b @ b), j)


def central_falling(tableau, start, threshold=0.05, cap=10, eps=EPS):
    """Repeat outline -> center -> foot from ``start``.

    Stops when an iteration removes less than ``threshold`` of the gap
    between the feasible height and the vertex height, or after ``cap``
    iterations.  Returns the list of :class:`FallStep`.
    """
    problem = tableau.problem
    b = np.asarray(problem.b_vec)
    f = _require_feasible(problem, start, eps)
    h_v = height(tableau)
    steps = []
    for it in range(cap):
        h_f = float(f @ b)
        gap = h_f - h_v
        if gap <= eps * (1.0 + abs(h_f)):
            break
        out = outline(tableau, f, eps)
        fall = foot(problem, out.center, eps)
        h_foot = float(fall.foot @ b)
        steps.append(FallStep(it + 1, out.center, fall, h_f, h_foot, h_v))
        f = fall.foot
        if (h_f - h_foot) / gap < threshold:
            break
    return steps


def falling_t_vectors(problem, points, eps=EPS):
    """Falling t-vectors of several points over the blocking columns.

    Returns ``(columns, vectors)``; the blocking columns (``D_j < 0``) do not
    depend on the point.
    """
    if not np.any(np.asarray(problem.b_vec) > 0):
        return np.zeros(0, dtype=int), np.zeros((len(points), 0))
    vectors = []
    columns = None
    for p in points:
        rows, down, _ = _landing(problem, np.asarray(p, dtype=float), eps)
        if columns is None:
            columns = np.flatnonzero(down)
        vectors.append(rows.t_vals[columns])
    return columns, np.array(vectors)


def _best_mix(current, partner, iters=100):
    """Maximise ``min((1-lam) current + lam partner)`` over ``lam`` in [0, 1]."""

    def value(lam):
        return float(np.min((1.0 - lam) * current + lam * partner))

    def slope(lam):
        mix = (1.0 - lam) * current + lam * partner
        k = int(np.argmin(mix))
        return partner[k] - current[k]

    if slope(0.0) <= 0:
        return 0.0, value(0.0)
    if slope(1.0) >= 0:
        return 1.0, value(1.0)
    lo, hi = 0.0, 1.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if slope(mid) > 0:
            lo = mid
        else:
            hi = mid
    lam = 0.5 * (lo + hi)
    return lam, value(lam)


def weighted_fall(points, center, problem, rounds=None, eps=EPS):
    """Greedy variable-weight combination of outline points, then fall.

    The candidates are the outline points followed by the center.  Starting
    from the candidate with the largest landing parameter, each round mixes in
    the partner whose best two-point balance raises the smallest combined
    t-value the most.  Returns ``(weights, FallResult)`` with weights over
    ``points + [center]``.
    """
    cands = [np.asarray(p, dtype=float) for p in points] + [np.asarray(center, dtype=float)]
    for p in cands:
        _require_feasible(problem, p, eps)
    columns, t = falling_t_vectors(problem, cands, eps)
    if columns.size == 0:
        raise DualUnboundedBelow("no constraint blocks the falling ray")
    t = np.maximum(t, 0.0)
    if np.any(np.all(t <= eps, axis=0)):
        raise DegenerateWeights("every candidate is blocked at t = 0 by the same plane")
    k0 = int(np.argmax(t.min(axis=1)))
    weights = np.zeros(len(cands))
    weights[k0] = 1.0
    current = t[k0].copy()
    for _ in range(rounds if rounds is not None else len(cands)):
        base = float(current.min())
        best = (base, None, 0.0)
        for k in range(len(cands)):
            lam, val = _best_mix(current, t[k])
            if val > best[0] + eps * (1.0 + abs(base)):
                best = (val, k, lam)
        if best[1] is None:
            break
        _, k, lam = best
        weights *= 1.0 - lam
        weights[k] += lam
        current = (1.0 - lam) * current + lam * t[k]
    mixed = weights @ np.array(cands)
    return weights, foot(problem, mixed, eps)
