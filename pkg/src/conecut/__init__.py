"""Cone-cutting solver for ``max {c x | A x <= b, x >= 0}``.

The simplex tableau is read in dual space as a cone whose vertex descends
onto the dual optimum.  Besides three pivot rules the package offers plane
elimination by critical heights, feasible intervals on horizontal edges and
central falling of a known feasible point.
"""

from .bench import benchmark, parse_family
from .cone import ConeView, cone_view, cut_edges, relative_heights, t_value_table
from .elimination import EliminationLedger, critical_record, fishing_row, prune, symbol_consistency_pivot
from .estimator import ConeCutSolver
from .exceptions import (
    ConeCutError,
    DimensionMismatch,
    NonFinite,
    NegativeTarget,
    IndexOutOfRange,
    ZeroPivot,
    LidBelowVertex,
    InvalidCut,
    NotACutter,
    EmptyFeasibleRegion,
    NoFishingEdge,
    ZeroDirection,
    NotFeasible,
    NotStrictlyNormal,
    DualUnboundedBelow,
    DegenerateWeights,
    NotOptimalTableau,
    TooLarge,
    OutOfRange,
    ParseError,
)
from .falling import central_falling, foot, outline, weighted_fall
from .generators import klee_minty, random_instance
from .io import dump_trace, load_trace, parse_problem, render_problem, replay_trace, trace_document
from .oracle import brute_force_oracle
from .problem import LID, LpProblem, extended_column, extended_cost, new_problem
from .rays import feasible_interval, horizontal_optimum, is_dual_feasible, tri_rows
from .rules import RuleChoice, deepest_cutter, highest_cutter, select_cutter, steepest_cutter
from .solver import Solution, SolverConfig, Status, extract_primal, solve
from .tableau import Tableau, attach_lid, height, initial_tableau, pivot, vertex

__version__ = "0.1.0"
