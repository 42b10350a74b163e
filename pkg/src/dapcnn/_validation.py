"""Small input-validation helpers shared across modules."""

import numpy as np

from .exceptions import DimensionMismatchError, NonFiniteInputError


def as_matrix(x, name="array"):
    """Coerce to a 2-D float array; 1-D input becomes a single column."""
    a = np.asarray(x, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise DimensionMismatchError(f"{name} must be 1-D or 2-D, got ndim={a.ndim}")
    return a


def as_vector(x, name="array"):
    a = np.asarray(x, dtype=float).ravel()
    return a


def check_finite(a, name="array"):
    if not np.all(np.isfinite(a)):
        raise NonFiniteInputError(f"{name} contains non-finite values")
    return a


def check_n_columns(a, n, name="array"):
    if a.shape[1] != n:
        raise DimensionMismatchError(
            f"{name} has {a.shape[1]} columns, expected {n}"
        )
    return a
