"""Column elimination through critical heights.

A nonbasic plane with negative cutting degree first meets the rising lid at
its critical point, the lowest point of the plane inside the current cone.
Since every cone contains the dual feasible region, no point of the region on
that plane lies below the critical height, so once a feasible point strictly
below it is known the plane cannot hold an optimum and is dropped from the
live index set.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .cone import cone_view
from .exceptions import EmptyFeasibleRegion, NoFishingEdge, NotACutter
from .problem import LID
from .tableau import pivot


class Verdict(enum.Enum):
    ELIMINABLE = "eliminable"
    CUTS_ALL_FEASIBLE = "cuts-all-feasible"
    UNDECIDED = "undecided"


class CutSign(enum.Enum):
    NEGATIVE_DEGREE = "negative"
    POSITIVE_DEGREE = "positive"


@dataclass
class CriticalRecord:
    j: int
    fishing_row: int
    critical_point: np.ndarray
    critical_height: float
    sign_of_cut: CutSign
    stale: bool = False
    iteration: int = 0


def immediate_eliminable(view, j):
    col = view.body[:, j]
    c_hat = view.cutting[j]
    eps = view.eps
    if c_hat < -eps and np.all(col >= -eps):
        return Verdict.ELIMINABLE
    if c_hat > eps and np.all(col <= eps):
        return Verdict.CUTS_ALL_FEASIBLE
    return Verdict.UNDECIDED


def fishing_row(view, j):
    """Row of the fishing edge of column ``j``.

    Negative degree: ``argmax {s_i/tau_ij | tau_ij < 0}``; positive degree:
    ``argmin {s_i/tau_ij | tau_ij > 0}``.  Ties go to the smallest row.
    """
    col = view.body[:, j]
    c_hat = view.cutting[j]
    eps = view.eps
    if abs(c_hat) <= eps:
        raise NotACutter(f"column {j} has zero cutting degree")
    rows = np.flatnonzero(col < -eps) if c_hat < 0 else np.flatnonzero(col > eps)
    if rows.size == 0:
        raise NoFishingEdge(f"column {j} has no coefficient of the required sign")
    ratios = view.slopes[rows] / col[rows]
    if c_hat < 0:
        best = np.max(ratios)
        pick = np.flatnonzero(ratios >= best - eps * (1.0 + abs(best)))
    else:
        best = np.min(ratios)
        pick = np.flatnonzero(ratios <= best + eps * (1.0 + abs(best)))
    return int(rows[pick[0]])


def critical_record(view, j, iteration=0):
    i = fishing_row(view, j)
    c_hat = view.cutting[j]
    tau = view.body[i, j]
    point = view.vertex + c_hat * view.edge_matrix[i] / tau
    u_star = view.height + c_hat * view.slopes[i] / tau
    sign = CutSign.NEGATIVE_DEGREE if c_hat < 0 else CutSign.POSITIVE_DEGREE
    return CriticalRecord(j, i, point, float(u_star), sign, iteration=iteration)


def symbol_consistency_pivot(tableau, j):
    """Pivot the lid into the fishing row of ``j``.

    Afterwards column ``j`` is componentwise non-negative (negative cutting
    degree) or non-positive (positive cutting degree).
    """
    view = cone_view(tableau)
    k = tableau.col(j)
    i = fishing_row(view, k)
    new, _ = pivot(tableau, i, LID)
    return new


@dataclass
class EliminationEvent:
    j: int
    reason: str
    critical_height: float
    feasible_height: float


@dataclass
class EliminationLedger:
    n_planes: int
    m: int
    live_set: list = field(default_factory=list)
    records: dict = field(default_factory=dict)
    eliminated: dict = field(default_factory=dict)
    events: list = field(default_factory=list)

    @classmethod
    def full(cls, n_planes, m):
        return cls(n_planes, m, list(range(n_planes)))

    def is_live(self, j):
        return j not in self.eliminated

    def can_remove(self):
        return len(self.live_set) > self.m

    def remove(self, j, reason, critical_height=float("nan"), feasible_height=float("nan")):
        if j in self.eliminated or not self.can_remove():
            return False
        self.live_set.remove(j)
        self.eliminated[j] = reason
        self.events.append(EliminationEvent(j, reason, critical_height, feasible_height))
        return True

    def add_record(self, record):
        older = self.records.setdefault(record.j, [])
        for rec in older:
            rec.stale = True
        older.append(record)

    def observe(self, view, basic, iteration=0):
        """Scan the live nonbasic columns of a cone view.

        Columns whose sign pattern already settles them are handled at once;
        the rest with nonzero cutting degree get a critical-height record.
        Raises :class:`EmptyFeasibleRegion` when a column cuts off everything.
        """
        basic = set(int(k) for k in basic)
        for j in list(self.live_set):
            if j in basic:
                continue
            verdict = immediate_eliminable(view, j)
            if verdict is Verdict.ELIMINABLE:
                self.remove(j, "sign-consistent")
                continue
            if verdict is Verdict.CUTS_ALL_FEASIBLE:
                raise EmptyFeasibleRegion(j)
            if abs(view.cutting[j]) <= view.eps:
                continue
            try:
                self.add_record(critical_record(view, j, iteration))
            except NoFishingEdge:
                continue


def prune(ledger, feasible_height, basic=(), tol=1e-9, cutoff_tol=1e-7):
    """Drop planes whose critical height lies strictly above a feasible height.

    ``basic`` lists columns currently in the base; those are kept.  A
    positive-degree record above the feasible height means the plane rejects
    every feasible point and raises :class:`EmptyFeasibleRegion`.
    """
    if not np.isfinite(feasible_height):
        return ledger
    basic = set(int(k) for k in basic)
    margin = tol * (1.0 + abs(feasible_height))
    cutoff = cutoff_tol * (1.0 + abs(feasible_height))
    for j in list(ledger.live_set):
        recs = ledger.records.get(j, ())
        for rec in recs:
            gap = rec.critical_height - feasible_height
            if rec.sign_of_cut is CutSign.POSITIVE_DEGREE:
                if gap > cutoff:
                    raise EmptyFeasibleRegion(j)
                continue
            if gap <= margin:
                continue
            if j not in basic:
                ledger.remove(j, "critical-height", rec.critical_height, feasible_height)
            break
    return ledger
