"""Cutter selection: deepest, steepest and highest principles.

Columns are physical tableau positions.  ``candidates`` restricts the search
to the live columns (the elimination module's index set); ties always go to
the smallest index.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .cone import leaving_candidates, relative_heights, t_value_table
from .exceptions import EmptyFeasibleRegion, NotACutter


class RuleChoice(enum.Enum):
    DEEPEST = "deepest"
    STEEPEST = "steepest"
    HIGHEST = "highest"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown rule {value!r}; choose from "
                             f"{', '.join(r.value for r in cls)}") from None


@dataclass(frozen=True)
class CutDecision:
    j_star: int
    i_star: int
    h_j: float = float("nan")


def _argmin_first(values, tol):
    best = np.min(values)
    return int(np.flatnonzero(values <= best + tol)[0])


def _argmax_first(values, tol):
    best = np.max(values)
    return int(np.flatnonzero(values >= best - tol)[0])


def _cutters(view, candidates):
    cols = np.flatnonzero(view.cutting > view.eps)
    if candidates is not None:
        live = np.zeros(view.cutting.shape[0], dtype=bool)
        live[list(candidates)] = True
        cols = cols[live[cols]]
    return cols


def leaving_row(view, j):
    """Smallest-index ``argmin {s_i / tau_ij | tau_ij > 0}``, or None."""
    if not view.cutting[j] > view.eps:
        raise NotACutter(f"column {j} has cutting degree {view.cutting[j]!r}")
    rows, ratios = leaving_candidates(view, j)
    if rows.size == 0:
        return None
    return int(rows[_argmin_first(ratios, view.eps)])


def deepest_cutter(view, candidates=None):
    cols = _cutters(view, candidates)
    if cols.size == 0:
        return None
    j = int(cols[_argmax_first(view.cutting[cols], 0.0)])
    i = leaving_row(view, j)
    if i is None:
        raise EmptyFeasibleRegion(j)
    return CutDecision(j, i, view.cutting[j] * view.slopes[i] / view.body[i, j])


def lowest_heights(view, candidates=None):
    """``h_j`` for every cutter column that has a real intersection."""
    heights, mask = relative_heights(view, t_value_table(view))
    out = {}
    for j in _cutters(view, candidates):
        if mask[:, j].any():
            out[int(j)] = float(np.min(heights[mask[:, j], j]))
    return out


def highest_cutter(view, candidates=None):
    heights, mask = relative_heights(view, t_value_table(view))
    best = None
    for j in _cutters(view, candidates):
        rows = np.flatnonzero(mask[:, j])
        if rows.size == 0:
            continue
        col = heights[rows, j]
        h_j = float(np.min(col))
        if best is None or h_j > best.h_j:
            i = int(rows[_argmin_first(col, view.eps * (1.0 + abs(h_j)))])
            best = CutDecision(int(j), i, h_j)
    return best


def steepest_cutter(view, candidates=None):
    best = None
    best_slope = -np.inf
    for j in _cutters(view, candidates):
        i = leaving_row(view, int(j))
        if i is None:
            continue
        if view.slopes[i] > best_slope:
            best_slope = view.slopes[i]
            best = CutDecision(int(j), i, view.cutting[j] * view.slopes[i] / view.body[i, j])
    return best


SELECTORS = {
    RuleChoice.DEEPEST: deepest_cutter,
    RuleChoice.STEEPEST: steepest_cutter,
    RuleChoice.HIGHEST: highest_cutter,
}


def select_cutter(view, rule, candidates=None):
    return SELECTORS[RuleChoice.parse(rule)](view, candidates)
