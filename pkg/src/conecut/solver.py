"""Solve orchestration: pure pivot-rule mode and the tri-skill loop.

Each pass of the loop
  1. stops when no live plane cuts the vertex,
  2. looks for a feasible interval on every horizontal edge,
  3. lets a known feasible point fall (when enabled) and prunes planes whose
     critical height lies above the new feasible height,
  4. pivots with the configured cutter rule and records critical heights.
"""

import enum
import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from ._validation import EPS, as_vector, check_positive, check_positive_int
from .cone import cone_view
from .elimination import EliminationLedger, prune
from .exceptions import (
    ConeCutError, DualUnboundedBelow, EmptyFeasibleRegion, NotFeasible, NotOptimalTableau,
    NotStrictlyNormal,
)
from .falling import central_falling
from .rays import horizontal_edges, horizontal_optimum, is_dual_feasible, tied_leaving_rows
from .rules import RuleChoice, select_cutter
from .tableau import _pivot_inplace, height, initial_tableau, vertex

logger = logging.getLogger(__name__)


class Status(enum.Enum):
    OPTIMAL = "optimal"
    OPTIMAL_INTERVAL = "optimal-interval"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    ITERATION_LIMIT = "iteration-limit"


@dataclass
class SolverConfig:
    rule: RuleChoice = RuleChoice.HIGHEST
    enable_elimination: bool = False
    enable_falling: bool = False
    feasible_point: object = None
    epsilon: float = EPS
    max_pivots: int = None
    falling_threshold: float = 0.05
    falling_cap: int = 10
    elimination_batch: int = None

    def __post_init__(self):
        self.rule = RuleChoice.parse(self.rule)
        check_positive(self.epsilon, "epsilon")
        check_positive(self.falling_threshold, "falling_threshold")
        check_positive_int(self.falling_cap, "falling_cap")
        if self.max_pivots is not None:
            check_positive_int(self.max_pivots, "max_pivots")
        if self.elimination_batch is not None:
            check_positive_int(self.elimination_batch, "elimination_batch")


@dataclass
class Solution:
    status: Status
    dual_point: np.ndarray
    dual_interval: object
    primal_point: np.ndarray
    objective: float
    pivots: int
    trace: list
    alternatives: list = field(default_factory=list)
    tableau: object = None
    ledger: object = None
    wall_time: float = 0.0

    @property
    def pivot_records(self):
        return [ev for ev in self.trace if ev["kind"] == "pivot"]

    @property
    def is_optimal(self):
        return self.status in (Status.OPTIMAL, Status.OPTIMAL_INTERVAL)


def extract_primal(tableau, problem=None, eps=EPS):
    """Read ``x*`` off an optimal tableau: basic ``x_j`` take their slope entry."""
    problem = problem or tableau.problem
    n = problem.n
    if np.any(tableau.reduced[:problem.n_planes] > eps):
        raise NotOptimalTableau("some plane still cuts the vertex")
    x = np.zeros(n)
    for i, k in enumerate(tableau.base):
        if k < n:
            x[k] = tableau.rhs[i]
    return x


def phase0_point(problem, eps=EPS):
    """A uniform dual point ``lam * (1, ..., 1)`` that is feasible, or None."""
    sums = problem.a_matrix.sum(axis=0)
    c = problem.c_vec
    if np.any((np.abs(sums) <= eps) & (c > eps)):
        return None
    pos, neg = sums > eps, sums < -eps
    lower = max(0.0, float(np.max(c[pos] / sums[pos]))) if pos.any() else 0.0
    upper = float(np.min(c[neg] / sums[neg])) if neg.any() else math.inf
    if lower > upper:
        return None
    lam = lower + 1.0 if lower + 1.0 <= upper else 0.5 * (lower + upper)
    y = np.full(problem.m, lam)
    return y if is_dual_feasible(problem, y, eps) else None


def _bland_choice(tab, view, candidates, eps):
    """Smallest-index entering column, leaving row by smallest basic index among ties."""
    cols = np.flatnonzero(view.cutting[:candidates.size] > eps)
    cols = cols[candidates[cols]]
    if cols.size == 0:
        return None
    j = int(cols[0])
    col = view.body[:, j]
    rows = np.flatnonzero(col > eps)
    if rows.size == 0:
        raise EmptyFeasibleRegion(j)
    ratios = view.slopes[rows] / col[rows]
    best = np.min(ratios)
    ties = rows[ratios <= best + eps * (1.0 + abs(best))]
    i = int(ties[np.argmin(tab.base[ties])])
    return i, j


class _Run:
    """Mutable state of a single solve."""

    def __init__(self, problem, config):
        self.problem = problem
        self.config = config
        self.eps = config.epsilon
        m, n_planes = problem.m, problem.n_planes
        self.tab = initial_tableau(problem)
        self.max_pivots = config.max_pivots or 10 * n_planes * m
        self.batch = config.elimination_batch or m
        self.ledger = EliminationLedger.full(n_planes, m) if config.enable_elimination else None
        self.trace = []
        self.pivots = 0
        self.iteration = 0
        self.degenerate_streak = 0
        self.feasible = None
        self.feasible_height = math.inf
        self._seed_feasible_point()

    def event(self, kind, **payload):
        self.trace.append({"kind": kind, "iteration": self.iteration, **payload})

    def _seed_feasible_point(self):
        cfg = self.config
        if cfg.feasible_point is not None:
            y = as_vector(cfg.feasible_point, self.problem.m, "feasible_point")
            if not is_dual_feasible(self.problem, y, self.eps):
                raise ValueError("feasible_point violates the dual constraints")
        elif cfg.enable_falling:
            y = phase0_point(self.problem, self.eps)
            if y is None:
                logger.warning("no feasible starting point found; falling disabled")
                return
        else:
            return
        self.feasible = y
        self.feasible_height = float(y @ self.problem.b_vec)

    def live_mask(self):
        n_cols = self.tab.n_cols
        mask = np.zeros(n_cols, dtype=bool)
        if self.ledger is None:
            mask[:self.problem.n_planes] = True
        else:
            mask[self.ledger.live_set] = True
        return mask

    def do_pivot(self, i, j, kind="pivot"):
        before = height(self.tab)
        leaving = int(self.tab.base[i])
        _pivot_inplace(self.tab, i, j, self.eps)
        after = height(self.tab)
        self.pivots += 1
        if after - before > self.eps * (1.0 + abs(after)):
            self.degenerate_streak = 0
        else:
            self.degenerate_streak += 1
        self.event(kind, row=i, entering=j, leaving=leaving,
                   vertex=vertex(self.tab).tolist(), height=after)

    def fall(self):
        if self.feasible is None or not self.config.enable_falling:
            return
        h_v = height(self.tab)
        gap = (self.feasible_height - h_v) / max(1.0, abs(self.feasible_height))
        if gap < self.config.falling_threshold:
            return
        try:
            steps = central_falling(self.tab, self.feasible, self.config.falling_threshold,
                                    self.config.falling_cap, self.eps)
        except (NotStrictlyNormal, DualUnboundedBelow, NotFeasible) as exc:
            logger.debug("falling skipped: %s", exc)
            return
        for st in steps:
            self.event("fall", center=st.center.tolist(), foot=st.fall.foot.tolist(),
                       height=st.foot_height, effectiveness=st.effectiveness,
                       blocking_plane=st.fall.blocking_plane)
        if steps:
            self.feasible = steps[-1].fall.foot
            self.feasible_height = float(self.feasible @ self.problem.b_vec)

    def prune(self):
        if self.ledger is None:
            return
        before = len(self.ledger.events)
        prune(self.ledger, self.feasible_height, basic=self.tab.base)
        self._log_eliminations(before)

    def observe(self, view):
        if self.ledger is None:
            return
        before = len(self.ledger.events)
        self.ledger.observe(view, self.tab.base, self.iteration)
        self._log_eliminations(before)

    def _log_eliminations(self, before):
        for ev in self.ledger.events[before:]:
            self.event("elimination", index=ev.j, reason=ev.reason,
                       critical_height=ev.critical_height, feasible_height=ev.feasible_height)

    def choose(self, view, live):
        eps = self.eps
        if self.degenerate_streak >= self.problem.m:
            return _bland_choice(self.tab, view, live, eps)
        for row in horizontal_edges(view):
            col = view.body[row]
            ok = (view.cutting > eps) & (col > eps) & live
            if ok.any():
                t = np.where(ok, view.cutting / np.where(ok, col, 1.0), np.inf)
                return row, int(np.argmin(t))
        decision = select_cutter(view, self.config.rule, np.flatnonzero(live))
        if decision is None:
            return None
        tied = tied_leaving_rows(view, decision.j_star)
        if len(tied) > 1:
            self.event("horizontal-edge", predicted=True, column=decision.j_star, rows=tied)
        return decision.i_star, decision.j_star

    def finish_optimal(self, kind="polish"):
        """Pivot with Bland's rule over every plane until none cuts the vertex."""
        all_cols = np.zeros(self.tab.n_cols, dtype=bool)
        all_cols[:self.problem.n_planes] = True
        for _ in range(self.max_pivots):
            view = cone_view(self.tab, self.eps)
            choice = _bland_choice(self.tab, view, all_cols, self.eps)
            if choice is None:
                return True
            self.do_pivot(*choice, kind=kind)
        return False

    def run(self):
        eps = self.eps
        since_fall = self.batch
        self.prune()
        while True:
            self.iteration += 1
            view = cone_view(self.tab, eps)
            live = self.live_mask()
            cutters = (view.cutting > eps) & live
            if not cutters.any():
                return self.optimal()
            for j in np.flatnonzero(cutters):
                if not np.any(view.body[:, j] > eps):
                    raise EmptyFeasibleRegion(int(j))
            for row in horizontal_edges(view):
                iv = horizontal_optimum(self.tab, row, eps)
                self.event("horizontal-edge", row=row, feasible=iv is not None)
                if iv is not None:
                    return self.interval(iv)
            if since_fall >= self.batch:
                since_fall = 0
                self.fall()
                self.prune()
            if self.pivots >= self.max_pivots:
                return self.limit()
            choice = self.choose(view, live)
            if choice is None:
                raise EmptyFeasibleRegion(-1)
            self.do_pivot(*choice)
            since_fall += 1
            if self.ledger is not None:
                self.observe(cone_view(self.tab, eps))
                self.prune()

    def optimal(self):
        if self.ledger is not None and self.ledger.eliminated:
            if not self.finish_optimal():
                return self.limit()
        x = extract_primal(self.tab, self.problem, self.eps)
        y = vertex(self.tab)
        view = cone_view(self.tab, self.eps)
        for row in horizontal_edges(view):
            iv = horizontal_optimum(self.tab, row, self.eps)
            if iv is not None and (not iv.bounded or iv.t_b - iv.t_a > self.eps):
                self.event("horizontal-edge", row=row, feasible=True)
                return self.solution(Status.OPTIMAL_INTERVAL, iv.q_a.copy(), iv, x)
        return self.solution(Status.OPTIMAL, y, None, x)

    def interval(self, iv):
        dual = iv.q_a.copy()
        # polish a scratch copy for x*; the trace keeps the interval tableau
        saved = (self.tab.copy(), self.pivots, len(self.trace), self.degenerate_streak)
        x = extract_primal(self.tab, self.problem, self.eps) if self.finish_optimal() else None
        self.tab, self.pivots, n_events, self.degenerate_streak = saved
        del self.trace[n_events:]
        return self.solution(Status.OPTIMAL_INTERVAL, dual, iv, x)

    def limit(self):
        return self.solution(Status.ITERATION_LIMIT, vertex(self.tab), None, None)

    def solution(self, status, y, interval, x):
        objective = math.inf if status is Status.INFEASIBLE else float(height(self.tab))
        self.event("terminal", status=status.value, objective=objective, pivots=self.pivots)
        return Solution(status, y, interval, x, objective, self.pivots, self.trace,
                        tableau=self.tab, ledger=self.ledger)


def solve(problem, config=None, **kwargs):
    """Solve ``max {cx | Ax <= b, x >= 0}`` by cone cutting.

    ``config`` is a :class:`SolverConfig`; keyword arguments build one.
    Errors inside the solve are reported through ``Solution.status``.
    """
    if config is None:
        config = SolverConfig(**kwargs)
    elif kwargs:
        raise TypeError("pass either a config or keyword arguments, not both")
    start = time.perf_counter()
    run = _Run(problem, config)
    try:
        sol = run.run()
    except EmptyFeasibleRegion as exc:
        run.event("infeasible", column=exc.column)
        sol = run.solution(Status.INFEASIBLE, vertex(run.tab), None, None)
    except ConeCutError:
        logger.exception("solve aborted")
        raise
    sol.wall_time = time.perf_counter() - start
    return sol
