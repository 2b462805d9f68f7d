"""Weyl-Heisenberg group H(n) in coordinates (p, q, iota).

Elements multiply as

    (p', q', i') * (p, q, i) = (p'+p, q'+q, i+i' + (p'.q - q'.p)/2)

with identity (0, 0, 0) and inverse (-p, -q, -i).  The pair z = (p, q) is a
view of the same element as a vector in R^{2n}; the skew form zeta of
`whsp.symplectic` satisfies  i'' = i + i' + z'^t zeta z / 2.

Coordinates may be floats or exact rationals (dtype=object arrays); every
operation is pure and backend-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact import as_exact, is_exact, max_abs, rat


class DimensionMismatch(ValueError):
    pass


def _half(exact: bool):
    return rat(1, 2) if exact else 0.5


def _vec(v, exact):
    v = np.asarray(v) if not exact else as_exact(np.asarray(v, dtype=object))
    if v.ndim != 1:
        raise ValueError("expected a 1-d coordinate vector")
    return v if exact else v.astype(float)


@dataclass(frozen=True)
class WHElement:
    """Group element Upsilon(p, q, iota); p, q length-n vectors."""

    n: int
    p: np.ndarray
    q: np.ndarray
    iota: object

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if len(self.p) != self.n or len(self.q) != self.n:
            raise DimensionMismatch("p and q must have length n")

    @property
    def exact(self) -> bool:
        return is_exact(self.p)

    @property
    def z(self) -> np.ndarray:
        """The z-view (p, q) as a single 2n-vector; a re-indexing, not a copy type."""
        return np.concatenate([self.p, self.q])

    def __eq__(self, other):
        if not isinstance(other, WHElement) or self.n != other.n:
            return NotImplemented
        return (all(a == b for a, b in zip(self.p, other.p))
                and all(a == b for a, b in zip(self.q, other.q))
                and self.iota == other.iota)

    def isclose(self, other, tol=1e-12) -> bool:
        return (self.n == other.n
                and max_abs(self.p - other.p) <= tol
                and max_abs(self.q - other.q) <= tol
                and abs(self.iota - other.iota) <= tol)

    def __repr__(self):
        return f"WHElement(n={self.n}, p={list(self.p)}, q={list(self.q)}, iota={self.iota})"


def wh_element(p, q, iota, exact=False) -> WHElement:
    p = _vec(p, exact)
    q = _vec(q, exact)
    if exact:
        iota = rat(iota) if not isinstance(iota, float) else rat(*iota.as_integer_ratio())
    else:
        iota = float(iota)
    return WHElement(len(p), p, q, iota)


def wh_identity(n, exact=False) -> WHElement:
    return wh_element([0] * n, [0] * n, 0, exact=exact)


def wh_from_z(z, iota, exact=False) -> WHElement:
    z = np.asarray(z, dtype=object if exact else float)
    n = len(z) // 2
    return wh_element(z[:n], z[n:], iota, exact=exact)


def _same_n(a: WHElement, b: WHElement):
    if a.n != b.n:
        raise DimensionMismatch(f"dimension mismatch: {a.n} != {b.n}")


def wh_product(a: WHElement, b: WHElement) -> WHElement:
    _same_n(a, b)
    half = _half(a.exact)
    iota = a.iota + b.iota + half * (np.dot(a.p, b.q) - np.dot(a.q, b.p))
    return WHElement(a.n, a.p + b.p, a.q + b.q, iota)


def wh_inverse(a: WHElement) -> WHElement:
    return WHElement(a.n, -a.p, -a.q, -a.iota)


def wh_inner_aut(g: WHElement, h: WHElement) -> WHElement:
    """Conjugation g h g^{-1}; only the central coordinate of h moves."""
    _same_n(g, h)
    return WHElement(h.n, h.p, h.q, h.iota + np.dot(g.p, h.q) - np.dot(g.q, h.p))


# --- matrix realization -----------------------------------------------------
#
# (2n+2) x (2n+2) block template, a faithful homomorphism for the product
# above:
#
#     [ 1_n   0    0   p  ]
#     [ 0    1_n   0   q  ]        third row is z^t zeta = (-q^t, p^t)
#     [-q^t  p^t   1  2 i ]
#     [ 0     0    0   1  ]

def wh_to_matrix(a: WHElement) -> np.ndarray:
    n, exact = a.n, a.exact
    from .exact import eye, zeros
    m = zeros((2 * n + 2, 2 * n + 2), exact=exact)
    m[:2 * n, :2 * n] = eye(2 * n, exact=exact)
    m[:n, 2 * n + 1] = a.p
    m[n:2 * n, 2 * n + 1] = a.q
    m[2 * n, :n] = -a.q
    m[2 * n, n:2 * n] = a.p
    one = rat(1) if exact else 1.0
    m[2 * n, 2 * n] = one
    m[2 * n, 2 * n + 1] = 2 * a.iota
    m[2 * n + 1, 2 * n + 1] = one
    return m


def wh_from_matrix(m: np.ndarray, tol=1e-12) -> WHElement:
    """Invert wh_to_matrix; rejects matrices that do not match the template."""
    m = np.asarray(m)
    exact = is_exact(m)
    size = m.shape[0]
    if m.shape != (size, size) or size % 2 != 0 or size < 4:
        raise ValueError("expected a square matrix of size 2n+2")
    n = (size - 2) // 2
    p = m[:n, 2 * n + 1].copy()
    q = m[n:2 * n, 2 * n + 1].copy()
    half = _half(exact)
    iota = half * m[2 * n, 2 * n + 1]
    expect = wh_to_matrix(WHElement(n, p, q, iota))
    dev = max_abs(m - expect)
    limit = 0 if exact else tol
    if dev > limit:
        raise ValueError(f"matrix does not match the group template (max dev {dev})")
    return WHElement(n, p, q, iota)


# --- polarized realizations -------------------------------------------------
#
# Two isomorphic coordinate systems obtained by shearing the central
# coordinate by +/- p.q/2.  In the '+' coordinates the product law is
# i'' = i + i' + p'.q, in the '-' coordinates i'' = i + i' - q'.p; both are
# verified against wh_product through the polarize/unpolarize bijection.

@dataclass(frozen=True)
class PolarizedWHElement:
    sign: int  # +1 or -1
    n: int
    p: np.ndarray
    q: np.ndarray
    iota: object

    def __eq__(self, other):
        if not isinstance(other, PolarizedWHElement):
            return NotImplemented
        return (self.sign == other.sign and self.n == other.n
                and all(a == b for a, b in zip(self.p, other.p))
                and all(a == b for a, b in zip(self.q, other.q))
                and self.iota == other.iota)


def wh_polarize(a: WHElement, sign: int) -> PolarizedWHElement:
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    half = _half(a.exact)
    iota = a.iota + sign * half * np.dot(a.p, a.q)
    return PolarizedWHElement(sign, a.n, a.p, a.q, iota)


def wh_unpolarize(a: PolarizedWHElement) -> WHElement:
    half = _half(is_exact(a.p))
    return WHElement(a.n, a.p, a.q, a.iota - a.sign * half * np.dot(a.p, a.q))


def polarized_product(a: PolarizedWHElement, b: PolarizedWHElement) -> PolarizedWHElement:
    if a.sign != b.sign:
        raise ValueError("cannot mix polarizations")
    if a.n != b.n:
        raise DimensionMismatch(f"dimension mismatch: {a.n} != {b.n}")
    if a.sign == +1:
        cross = np.dot(a.p, b.q)
    else:
        cross = -np.dot(a.q, b.p)
    return PolarizedWHElement(a.sign, a.n, a.p + b.p, a.q + b.q, a.iota + b.iota + cross)


def polarized_inverse(a: PolarizedWHElement) -> PolarizedWHElement:
    pq = np.dot(a.p, a.q)
    return PolarizedWHElement(a.sign, a.n, -a.p, -a.q, -a.iota + a.sign * pq)


# --- serialization ----------------------------------------------------------

def wh_to_json(a: WHElement) -> dict:
    return {"n": a.n, "p": [float(v) for v in a.p],
            "q": [float(v) for v in a.q], "iota": float(a.iota)}


def wh_from_json(d: dict) -> WHElement:
    e = wh_element(d["p"], d["q"], d["iota"])
    if e.n != d["n"]:
        raise ValueError("inconsistent n in serialized element")
    return e
