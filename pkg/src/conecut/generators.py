"""Instance generators: the Klee-Minty family and seeded random problems."""

import numpy as np

from .exceptions import OutOfRange
from .problem import new_problem

KLEE_MINTY_MAX = 12


def klee_minty(m):
    """Klee-Minty cube of dimension ``m`` (``1 <= m <= 12``).

    ``A[i][j] = 2*10**(i-j)`` below the diagonal, ones on it,
    ``b_i = 100**i`` and ``c_j = 10**(m-1-j)`` with 0-based indices.
    """
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or not 1 <= m <= KLEE_MINTY_MAX:
        raise OutOfRange(f"klee_minty needs 1 <= m <= {KLEE_MINTY_MAX}, got {m!r}")
    m = int(m)
    a = np.eye(m)
    for i in range(m):
        for j in range(i):
            a[i, j] = 2.0 * 10.0 ** (i - j)
    b = 100.0 ** np.arange(m)
    c = 10.0 ** np.arange(m - 1, -1, -1)
    return new_problem(a, b, c)


def random_instance(seed, m, n, coeff_range=(-5, 5), b_range=(0, 10)):
    """Integer-valued random problem; identical for identical arguments.

    ``A`` and ``c`` are drawn from ``coeff_range``, ``b`` from ``b_range``
    (inclusive bounds, ``b_range[0] >= 0``).
    """
    lo, hi = (int(v) for v in coeff_range)
    b_lo, b_hi = (int(v) for v in b_range)
    if lo > hi or b_lo > b_hi:
        raise OutOfRange("empty coefficient range")
    if b_lo < 0:
        raise OutOfRange("b_range must be non-negative")
    if m < 1 or n < 1:
        raise OutOfRange("dimensions must be positive")
    rng = np.random.default_rng(seed)
    a = rng.integers(lo, hi, size=(m, n), endpoint=True).astype(float)
    b = rng.integers(b_lo, b_hi, size=m, endpoint=True).astype(float)
    c = rng.integers(lo, hi, size=n, endpoint=True).astype(float)
    return new_problem(a, b, c)
