"""The LP statement ``max {cx | Ax <= b}`` and its extended columns.

Columns of the extended matrix ``A+ = (A, I)`` are addressed with 0-based
integers: ``0..n-1`` are the cut planes ``x_j`` and ``n..n+m-1`` are the
coordinate planes ``y_i``.  The horizontal lid column is addressed with the
:data:`LID` sentinel.
"""

import enum
from dataclasses import dataclass

import numpy as np

from ._validation import as_matrix, as_vector
from .exceptions import DimensionMismatch, IndexOutOfRange, NegativeTarget


class _Lid(enum.Enum):
    LID = "delta"

    def __repr__(self):
        return "LID"


#: Sentinel index of the reverse horizontal lid column.
LID = _Lid.LID


def _frozen(arr):
    arr = np.array(arr, dtype=np.float64, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class LpProblem:
    """Immutable problem data.  Build instances with :func:`new_problem`."""

    a_matrix: np.ndarray
    b_vec: np.ndarray
    c_vec: np.ndarray

    @property
    def m(self):
        return self.a_matrix.shape[0]

    @property
    def n(self):
        return self.a_matrix.shape[1]

    @property
    def n_planes(self):
        return self.n + self.m

    @property
    def a_plus(self):
        """Extended constraint matrix ``(A, I)``."""
        return np.hstack([self.a_matrix, np.eye(self.m)])

    @property
    def c_plus(self):
        """Extended cost ``(c, 0, ..., 0)``."""
        return np.concatenate([self.c_vec, np.zeros(self.m)])

    def plane_name(self, j):
        if j is LID:
            return "xD"
        j = self._check_index(j)
        return f"x{j + 1}" if j < self.n else f"y{j - self.n + 1}"

    def _check_index(self, j):
        if isinstance(j, (bool, np.bool_)) or not isinstance(j, (int, np.integer)):
            raise IndexOutOfRange(f"plane index must be an int or LID, got {j!r}")
        if not 0 <= j < self.n_planes:
            raise IndexOutOfRange(f"plane index {j} outside 0..{self.n_planes - 1}")
        return int(j)

    def __eq__(self, other):
        if not isinstance(other, LpProblem):
            return NotImplemented
        return (np.array_equal(self.a_matrix, other.a_matrix)
                and np.array_equal(self.b_vec, other.b_vec)
                and np.array_equal(self.c_vec, other.c_vec))

    def __hash__(self):
        return hash((self.a_matrix.tobytes(), self.b_vec.tobytes(), self.c_vec.tobytes()))

    def __repr__(self):
        return f"LpProblem(m={self.m}, n={self.n})"


def new_problem(a_matrix, b_vec, c_vec):
    """Validate and freeze ``(A, b, c)``.

    Raises
    ------
    DimensionMismatch
        If shapes disagree.
    NonFinite
        If any entry is NaN or infinite.
    NegativeTarget
        If some ``b_i < 0``; the cone-cutting view needs a non-negative target.
    """
    a = as_matrix(a_matrix, "A")
    m, n = a.shape
    b = as_vector(b_vec, name="b")
    c = as_vector(c_vec, name="c")
    if b.shape[0] != m:
        raise DimensionMismatch(f"b has length {b.shape[0]} but A has {m} rows")
    if c.shape[0] != n:
        raise DimensionMismatch(f"c has length {c.shape[0]} but A has {n} columns")
    negative = np.flatnonzero(b < 0)
    if negative.size:
        i = int(negative[0])
        raise NegativeTarget(i, float(b[i]))
    return LpProblem(_frozen(a), _frozen(b), _frozen(c))


def extended_column(problem, j):
    """Return the original normal vector of plane ``j`` (``LID`` gives ``-b``)."""
    if j is LID:
        return -np.array(problem.b_vec)
    j = problem._check_index(j)
    if j < problem.n:
        return np.array(problem.a_matrix[:, j])
    col = np.zeros(problem.m)
    col[j - problem.n] = 1.0
    return col


def extended_cost(problem, j, u=None):
    """Constant term of plane ``j``; the lid at height ``u`` has constant ``-u``."""
    if j is LID:
        if u is None:
            raise ValueError("the lid constant needs a height u")
        return -float(u)
    j = problem._check_index(j)
    return float(problem.c_vec[j]) if j < problem.n else 0.0
