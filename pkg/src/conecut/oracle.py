"""Brute-force vertex enumeration, used as an independent check of the solver."""

from itertools import combinations

import numpy as np

from .exceptions import TooLarge

MAX_PLANES = 24


def _basic_solutions(mat, rhs, size):
    """Solve ``mat[:, S]^T z = rhs[S]`` for every nonsingular ``size``-subset ``S``."""
    subsets = np.array(list(combinations(range(mat.shape[1]), size)), dtype=int)
    faces = np.transpose(mat[:, subsets], (1, 2, 0))  # (K, size, rows) = face^T
    dets = np.linalg.det(faces)
    ok = np.abs(dets) > 1e-9 * (1.0 + np.max(np.abs(mat))) ** size
    sols = np.linalg.solve(faces[ok], rhs[subsets[ok]][..., None])[..., 0]
    return sols


def dual_vertices(problem, tol=1e-9):
    """Every vertex of the dual feasible region."""
    a_plus, c_plus = problem.a_plus, problem.c_plus
    ys = _basic_solutions(a_plus, c_plus, problem.m)
    slack = ys @ a_plus - c_plus
    scale = (1.0 + np.sum(np.abs(a_plus), axis=0))[None, :] * (1.0 + np.max(np.abs(ys), axis=1))[:, None]
    return list(ys[np.all(slack >= -tol * scale, axis=1)])


def _primal_vertices(problem, tol):
    a, b = problem.a_matrix, problem.b_vec
    n = problem.n
    # rows of x >= 0 written as -x <= 0, then A x <= b
    g = np.vstack([-np.eye(n), a])
    h = np.concatenate([np.zeros(n), b])
    xs = _basic_solutions(g.T, h, n)
    resid = xs @ g.T - h
    scale = (1.0 + np.abs(h))[None, :] * (1.0 + np.max(np.abs(xs), axis=1))[:, None]
    return list(xs[np.all(resid <= tol * scale, axis=1)])


def brute_force_oracle(problem, tol=1e-9):
    """Enumerate every basic solution of the dual and the primal.

    Returns a :class:`~conecut.solver.Solution` whose ``alternatives`` lists
    every optimal dual vertex.
    """
    from .solver import Solution, Status

    if problem.n_planes > MAX_PLANES:
        raise TooLarge(f"{problem.n_planes} planes exceed the oracle limit of {MAX_PLANES}")
    verts = dual_vertices(problem, tol)
    if not verts:
        return Solution(Status.INFEASIBLE, None, None, None, float("inf"), 0, [])
    heights = np.array([y @ problem.b_vec for y in verts])
    best = float(np.min(heights))
    close = np.flatnonzero(heights <= best + 1e-9 * (1.0 + abs(best)))
    optimal = []
    for k in close:
        if not any(np.allclose(verts[k], y, atol=1e-9) for y in optimal):
            optimal.append(verts[k])
    optimal.sort(key=tuple)
    primal = list(_primal_vertices(problem, tol))
    values = np.array([problem.c_vec @ x for x in primal])
    x_star = primal[int(np.argmax(values))]
    return Solution(Status.OPTIMAL, optimal[0], None, x_star, best, 0, [],
                    alternatives=optimal)
