"""scikit-learn style wrapper around :func:`solve`."""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import as_matrix, as_vector
from .problem import new_problem
from .solver import SolverConfig, solve


class ConeCutSolver(BaseEstimator):
    """Solve ``max {c x | A x <= b, x >= 0}`` with the cone-cutting method.

    ``fit(A, b, c)`` takes the place of ``fit(X, y)``: the data of one LP.

    Attributes set by ``fit``: ``solution_``, ``x_``, ``y_``, ``objective_``,
    ``status_``, ``n_pivots_``.
    """

    def __init__(self, rule="highest", elimination=False, falling=False,
                 feasible_point=None, epsilon=1e-9, max_pivots=None):
        self.rule = rule
        self.elimination = elimination
        self.falling = falling
        self.feasible_point = feasible_point
        self.epsilon = epsilon
        self.max_pivots = max_pivots

    def _config(self):
        return SolverConfig(rule=self.rule, enable_elimination=self.elimination,
                            enable_falling=self.falling, feasible_point=self.feasible_point,
                            epsilon=self.epsilon, max_pivots=self.max_pivots)

    def fit(self, A, b, c):
        a = as_matrix(A, "A")
        problem = new_problem(a, as_vector(b, a.shape[0], "b"), as_vector(c, a.shape[1], "c"))
        sol = solve(problem, self._config())
        self.problem_ = problem
        self.solution_ = sol
        self.status_ = sol.status
        self.objective_ = sol.objective
        self.x_ = sol.primal_point
        self.y_ = sol.dual_point
        self.n_pivots_ = sol.pivots
        self.n_features_in_ = problem.n
        return self

    def score(self, A=None, b=None, c=None):
        """Optimal value of the fitted problem (arguments are ignored)."""
        check_is_fitted(self, "solution_")
        return float(self.objective_)

    def predict(self, X):
        """Objective ``c x`` for each row of ``X``."""
        check_is_fitted(self, "solution_")
        X = as_matrix(X, "X")
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} columns, expected {self.n_features_in_}")
        return X @ np.asarray(self.problem_.c_vec)
