"""Shared scalar/array helpers for the exact-rational and float backends.

Group-law identities are polynomial in the coordinates, so they are checked
with exact rational arithmetic; Hilbert-space code uses float64.  Both
backends share the same operation code paths: everything is written against
numpy arrays, with ``dtype=object`` rational entries for the exact backend.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

try:
    from gmpy2 import mpq as _rational  # noqa: F401  (much faster than Fraction)
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    _rational = Fraction
    HAVE_GMPY2 = False


def rat(num, den=1):
    """Exact rational scalar (gmpy2.mpq when available, Fraction otherwise)."""
    return _rational(num, den)


def is_exact(array) -> bool:
    return getattr(array, "dtype", None) == np.dtype(object)


def zeros(shape, exact=False):
    if not exact:
        return np.zeros(shape, dtype=float)
    out = np.empty(shape, dtype=object)
    out[...] = rat(0)
    return out


def eye(k, exact=False):
    if not exact:
        return np.eye(k)
    out = zeros((k, k), exact=True)
    for i in range(k):
        out[i, i] = rat(1)
    return out


def as_exact(array):
    """Copy an int/float/rational array into an exact object array."""
    a = np.asarray(array)
    out = np.empty(a.shape, dtype=object)
    flat_in = a.reshape(-1)
    flat_out = out.reshape(-1)
    for i, v in enumerate(flat_in):
        if isinstance(v, float):
            flat_out[i] = rat(Fraction(v))
        else:
            flat_out[i] = rat(v)
    return out


def as_float(array):
    a = np.asarray(array)
    if a.dtype != np.dtype(object):
        return a.astype(float)
    return np.array([[float(x) for x in row] for row in a.reshape(a.shape[0], -1)],
                    dtype=float).reshape(a.shape) if a.ndim > 1 else \
        np.array([float(x) for x in a], dtype=float)


def rand_rational(rng: random.Random, num_max=9, den_max=9):
    return rat(rng.randint(-num_max, num_max), rng.randint(1, den_max))


def rand_rational_vector(rng: random.Random, k, **kw):
    out = np.empty(k, dtype=object)
    for i in range(k):
        out[i] = rand_rational(rng, **kw)
    return out


def max_abs(array) -> float:
    """max |entry|, valid for both backends (exact entries compare exactly)."""
    a = np.asarray(array)
    if a.size == 0:
        return 0.0
    if a.dtype == np.dtype(object):
        return max(abs(x) for x in a.reshape(-1))
    return float(np.max(np.abs(a)))
