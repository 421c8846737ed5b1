"""Geometric views of a tableau: cone, t-value table, relative heights.

``cut_edges`` recomputes the edge directions of the cut cone directly from
the intersection points.  The solver never uses it; it exists so the pivot
can be checked against the geometry it claims to perform.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import EPS
from .exceptions import InvalidCut
from .tableau import height, vertex


@dataclass(frozen=True)
class ConeView:
    vertex: np.ndarray
    edge_matrix: np.ndarray
    slopes: np.ndarray
    cutting: np.ndarray
    body: np.ndarray
    base: np.ndarray
    height: float
    strictly_normal: bool
    eps: float = EPS

    @property
    def m(self):
        return self.body.shape[0]


@dataclass(frozen=True)
class TValueTable:
    entries: np.ndarray
    defined: np.ndarray

    def __getitem__(self, idx):
        return self.entries[idx] if self.defined[idx] else None


def cone_view(tableau, eps=EPS):
    slopes = tableau.rhs.copy()
    return ConeView(
        vertex=vertex(tableau),
        edge_matrix=tableau.edge_matrix.copy(),
        slopes=slopes,
        cutting=tableau.reduced.copy(),
        body=tableau.body.copy(),
        base=tableau.base.copy(),
        height=height(tableau),
        strictly_normal=bool(np.all(slopes > eps)),
        eps=eps,
    )


def t_value_table(view):
    defined = np.abs(view.body) > view.eps
    entries = np.zeros_like(view.body)
    np.divide(np.broadcast_to(view.cutting, view.body.shape), view.body,
              out=entries, where=defined)
    return TValueTable(entries, defined)


def relative_heights(view, t_table=None):
    """Heights ``t_ij * s_i`` of the real intersections (``t_ij > 0``).

    Returns ``(heights, mask)``; entries outside ``mask`` are vacancies.
    """
    if t_table is None:
        t_table = t_value_table(view)
    mask = t_table.defined & (t_table.entries > 0.0)
    heights = np.where(mask, t_table.entries * view.slopes[:, None], 0.0)
    return heights, mask


def cut_edges(view, j_star, i_star):
    """Edge directions of the cone after cutting with column ``j_star``.

    ``j_star`` is a physical column position.  Rows follow the four cases:
    the leaving edge keeps its direction, edges with a real intersection point
    from ``Q_i*`` to ``Q_i``, virtual ones the other way, and edges parallel to
    the cutter are unchanged.
    """
    t_table = t_value_table(view)
    if not t_table.defined[i_star, j_star] or not t_table.entries[i_star, j_star] > view.eps:
        raise InvalidCut(f"t[{i_star}, {j_star}] is not a positive intersection")
    t = t_table.entries[:, j_star]
    edges = view.edge_matrix
    q = view.vertex + t[:, None] * edges
    q_star = q[i_star]
    out = edges.copy()
    for i in range(view.m):
        if i == i_star or not t_table.defined[i, j_star]:
            continue
        out[i] = q[i] - q_star if t[i] > 0 else q_star - q[i]
    return out


def leaving_candidates(view, j):
    """Rows with ``tau_ij > eps`` and their ratios ``s_i / tau_ij``."""
    col = view.body[:, j]
    rows = np.flatnonzero(col > view.eps)
    return rows, view.slopes[rows] / col[rows]


def format_table(tableau, title=None, values=None, mask=None, width=9, precision=4):
    """Fixed-width text rendering of a tableau (or a derived table over its body).

    ``values``/``mask`` replace the body when given (t-value and relative
    height tables); masked-out entries print blank.
    """
    problem = tableau.problem
    names = [problem.plane_name(j) for j in range(problem.n_planes)]
    if tableau.has_lid:
        names.append("xD")
    body = tableau.body if values is None else values
    if mask is None:
        mask = np.ones(body.shape, dtype=bool)

    def cell(v, ok=True):
        if not ok:
            return " " * width
        if abs(v) < 1e-12:
            v = 0.0
        return f"{v:>{width}.{precision}g}"

    lines = []
    if title:
        lines.append(title)
    lines.append(" " * 5 + "".join(f"{nm:>{width}}" for nm in names) + f"{'s':>{width}}")
    for i in range(tableau.m):
        label = names[tableau.base[i]] if tableau.base[i] < len(names) else "?"
        lines.append(f"{label:<5}" + "".join(cell(body[i, k], mask[i, k]) for k in range(body.shape[1]))
                     + cell(tableau.rhs[i]))
    lines.append(f"{'c^':<5}" + "".join(cell(v) for v in tableau.reduced) + cell(tableau.objective_neg))
    return "\n".join(lines)
