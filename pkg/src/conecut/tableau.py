"""Dense extended simplex tableau and the pivot operation.

The tableau stores ``B^-1 A+`` (plus the optional lid column, always kept
last), the slope vector ``s = B^-1 b``, the cutting vector
``c^ = c+ - c_B B^-1 A+`` and ``-h(V)``.  The slack block of the body is the
regular edge matrix ``E*`` and the vertex is read off the slack block of the
cutting vector.
"""

from dataclasses import dataclass, field

import numpy as np

from ._validation import EPS
from .exceptions import IndexOutOfRange, LidBelowVertex, ZeroPivot
from .problem import LID, extended_column, extended_cost

DRIFT_CHECK_EVERY = 50
DRIFT_LIMIT = 1e-6


@dataclass(frozen=True)
class PivotRecord:
    iter: int
    i_star: int
    j_star: object
    entering: object
    leaving: object
    vertex_after: np.ndarray
    height_after: float
    classical: bool


@dataclass
class Tableau:
    problem: object
    body: np.ndarray
    rhs: np.ndarray
    reduced: np.ndarray
    objective_neg: float
    base: np.ndarray
    has_lid: bool = False
    u_value: float = float("nan")
    row_sign: np.ndarray = field(default=None)
    n_pivots: int = 0

    def __post_init__(self):
        if self.row_sign is None:
            self.row_sign = np.ones(self.m, dtype=np.int8)

    @property
    def m(self):
        return self.body.shape[0]

    @property
    def n(self):
        return self.problem.n

    @property
    def lid_col(self):
        return self.problem.n_planes

    @property
    def n_cols(self):
        return self.body.shape[1]

    def col(self, j):
        """Physical column position of plane ``j``."""
        if j is LID:
            if not self.has_lid:
                raise IndexOutOfRange("tableau has no lid column")
            return self.lid_col
        if isinstance(j, (bool, np.bool_)) or not isinstance(j, (int, np.integer)):
            raise IndexOutOfRange(f"bad plane index {j!r}")
        if not 0 <= j < self.n_cols:
            raise IndexOutOfRange(f"plane index {j} outside 0..{self.n_cols - 1}")
        return int(j)

    def plane(self, k):
        """Inverse of :meth:`col`."""
        return LID if self.has_lid and k == self.lid_col else int(k)

    @property
    def edge_matrix(self):
        return self.body[:, self.n:self.n + self.m]

    def basic_planes(self):
        return [self.plane(k) for k in self.base]

    def is_basic(self, j):
        return self.col(j) in set(self.base.tolist())

    def copy(self):
        return Tableau(self.problem, self.body.copy(), self.rhs.copy(), self.reduced.copy(),
                       self.objective_neg, self.base.copy(), self.has_lid, self.u_value,
                       self.row_sign.copy(), self.n_pivots)

    def face_matrix(self):
        """Original normal vectors of the basic planes, as columns."""
        return np.column_stack([extended_column(self.problem, self.plane(k)) for k in self.base])

    def drift(self):
        """``max |E* B - I|``."""
        return float(np.max(np.abs(self.edge_matrix @ self.face_matrix() - np.eye(self.m))))


def initial_tableau(problem):
    """The original table ``T_o``: body ``(A | I)``, slopes ``b``, cutting vector ``(c | 0)``."""
    m, n = problem.m, problem.n
    return Tableau(
        problem=problem,
        body=problem.a_plus,
        rhs=np.array(problem.b_vec),
        reduced=problem.c_plus,
        objective_neg=0.0,
        base=np.arange(n, n + m),
    )


def _pivot_inplace(tab, i, k, eps=EPS):
    p = tab.body[i, k]
    if not abs(p) > eps:
        raise ZeroPivot(f"pivot element at ({i}, {k}) is {p!r}")
    row = tab.body[i] / p
    rhs_i = tab.rhs[i] / p
    colk = tab.body[:, k].copy()
    colk[i] = 0.0
    tab.body -= np.outer(colk, row)
    tab.body[i] = row
    tab.rhs -= colk * rhs_i
    tab.rhs[i] = rhs_i
    r = tab.reduced[k]
    tab.reduced -= r * row
    tab.objective_neg -= r * rhs_i
    tab.body[:, k] = 0.0
    tab.body[i, k] = 1.0
    tab.reduced[k] = 0.0
    tab.base[i] = k
    classical = p > 0
    if not classical:
        tab.row_sign[i] = -tab.row_sign[i]
    tab.n_pivots += 1
    if tab.n_pivots % DRIFT_CHECK_EVERY == 0 and tab.drift() > DRIFT_LIMIT:
        _rebuild_inplace(tab)
    return classical


def pivot(tableau, i_star, j_star, eps=EPS):
    """Gauss-Jordan pivot at row ``i_star`` and plane ``j_star``.

    Returns a new tableau and the :class:`PivotRecord`.  A negative pivot
    element is allowed (the non-classical pivot used with the lid); the row is
    still normalised to a unit pivot, ``row_sign`` flips and the record is
    marked ``classical=False``.
    """
    if not 0 <= i_star < tableau.m:
        raise IndexOutOfRange(f"row {i_star} outside 0..{tableau.m - 1}")
    k = tableau.col(j_star)
    new = tableau.copy()
    leaving = new.plane(new.base[i_star])
    classical = _pivot_inplace(new, i_star, k, eps)
    record = PivotRecord(
        iter=new.n_pivots,
        i_star=i_star,
        j_star=j_star,
        entering=new.plane(k),
        leaving=leaving,
        vertex_after=vertex(new),
        height_after=height(new),
        classical=classical,
    )
    return new, record


def vertex(tableau):
    n, m = tableau.n, tableau.m
    return -tableau.reduced[n:n + m] + 0.0


def height(tableau):
    return -tableau.objective_neg


def attach_lid(tableau, u, eps=EPS):
    """Append the reverse horizontal lid ``-b.y = -u`` as the last column.

    The lid's cutting degree is the relative height ``-(u - h(V))``.
    """
    h = height(tableau)
    if not u - h > eps * (1.0 + abs(h)):
        raise LidBelowVertex(f"lid height {u!r} is not above the vertex height {h!r}")
    if tableau.has_lid and tableau.lid_col in set(tableau.base.tolist()):
        raise ValueError("cannot replace a lid that is currently basic")
    body = tableau.body[:, :tableau.lid_col]
    reduced = tableau.reduced[:tableau.lid_col]
    new = tableau.copy()
    new.body = np.hstack([body, -tableau.rhs[:, None]])
    new.reduced = np.append(reduced, -(u - h))
    new.has_lid = True
    new.u_value = float(u)
    return new


def _rebuild_inplace(tab):
    problem = tab.problem
    planes = [tab.plane(k) for k in tab.base]
    face = np.column_stack([extended_column(problem, j) for j in planes])
    edge = np.linalg.inv(face)
    cols = [problem.a_plus]
    costs = [problem.c_plus]
    if tab.has_lid:
        cols.append(-np.asarray(problem.b_vec)[:, None])
        costs.append([extended_cost(problem, LID, tab.u_value)])
    a_ext = np.hstack(cols)
    c_ext = np.concatenate(costs)
    c_base = np.array([extended_cost(problem, j, tab.u_value) for j in planes])
    v = c_base @ edge
    tab.body = edge @ a_ext
    tab.rhs = edge @ problem.b_vec
    tab.reduced = c_ext - v @ a_ext
    tab.objective_neg = -float(v @ problem.b_vec)
    for i, k in enumerate(tab.base):
        tab.body[:, k] = 0.0
        tab.body[i, k] = 1.0
        tab.reduced[k] = 0.0


def rebuild(tableau):
    """Recompute the tableau from the original data for its current base."""
    new = tableau.copy()
    _rebuild_inplace(new)
    return new


def from_transformed(body, rhs, reduced, base, n):
    """Tableau equal to a given transformed table, with original data recovered.

    ``body`` is ``m x (n+m)`` with the slack block holding ``E*``; the
    original problem is rebuilt as ``A = B body_x``, ``b = B s`` and
    ``c = c^_x + V A`` where ``B = E*^-1`` and ``V`` is the vertex.
    """
    from .problem import new_problem

    body = np.asarray(body, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    reduced = np.asarray(reduced, dtype=float)
    m = body.shape[0]
    face = np.linalg.inv(body[:, n:n + m])
    a = face @ body[:, :n]
    v = -reduced[n:n + m]
    problem = new_problem(a, face @ rhs, reduced[:n] + v @ a)
    tab = Tableau(problem, body.copy(), rhs.copy(), reduced.copy(),
                  -float(v @ problem.b_vec), np.asarray(base, dtype=int).copy())
    return tab
