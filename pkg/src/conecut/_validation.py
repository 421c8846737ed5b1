"""Input validation helpers shared by the public entry points."""

import numbers

import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import DimensionMismatch, NonFinite

EPS = 1e-9


def as_matrix(value, name="A"):
    try:
        arr = check_array(value, dtype=np.float64, ensure_all_finite=False,
                          ensure_min_samples=1, ensure_min_features=1)
    except ValueError as exc:
        raise DimensionMismatch(f"{name}: {exc}") from None
    if not np.all(np.isfinite(arr)):
        raise NonFinite(f"{name} contains non-finite entries")
    return arr


def as_vector(value, length=None, name="vector"):
    arr = np.asarray(value, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{name} must be one-dimensional, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise DimensionMismatch(f"{name} has length {arr.shape[0]}, expected {length}")
    if not np.all(np.isfinite(arr)):
        raise NonFinite(f"{name} contains non-finite entries")
    return arr


def check_positive(value, name):
    if not isinstance(value, numbers.Real) or not value > 0:
        raise ValueError(f"{name} must be a positive number, got {value!r}")
    return value


def check_positive_int(value, name):
    if not isinstance(value, numbers.Integral) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)
