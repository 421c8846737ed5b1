import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from conecut import ConeCutSolver, Status
from conecut.exceptions import DimensionMismatch


def test_fit_example():
    est = ConeCutSolver(rule="deepest").fit([[1, -1], [1, 1]], [1, 2], [2, 1])
    assert est.status_ is Status.OPTIMAL
    assert est.objective_ == pytest.approx(3.5)
    np.testing.assert_allclose(est.x_, [1.5, 0.5])
    np.testing.assert_allclose(est.y_, [0.5, 1.5])
    assert est.n_pivots_ == 2
    assert est.score() == pytest.approx(3.5)
    np.testing.assert_allclose(est.predict([[1.5, 0.5], [0, 0]]), [3.5, 0])


def test_params_and_clone():
    est = ConeCutSolver(rule="steepest", elimination=True)
    params = est.get_params()
    assert params["rule"] == "steepest" and params["elimination"] is True
    assert clone(est).get_params() == params
    est.set_params(falling=True)
    assert est.falling


def test_not_fitted():
    with pytest.raises(NotFittedError):
        ConeCutSolver().predict([[1, 2]])


def test_validation():
    with pytest.raises(DimensionMismatch):
        ConeCutSolver().fit([[1, 2]], [1, 2], [1, 1])
    with pytest.raises(ValueError):
        ConeCutSolver().fit([[1, np.nan]], [1], [1, 1])
