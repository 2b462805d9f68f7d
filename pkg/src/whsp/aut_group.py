"""Automorphism group of the Weyl-Heisenberg group.

An element Omega(delta, Sigma, z, iota) acts on H(n) by

    Upsilon(z_h, i_h)  ->  Upsilon(delta Sigma z_h,
                                   delta^2 i_h + delta z^t zeta Sigma z_h)

and is realized faithfully by the (2n+2)-matrix

    [ delta Sigma            0        z   ]
    [ delta z^t zeta Sigma  delta^2  2 i  ]
    [ 0                      0        1   ]

with product

    Omega(d', S', z', i') Omega(d, S, z, i)
        = Omega(d'd, S'S, z' + d'S'z, i' + d'^2 i + d' z'^t zeta S' z / 2)

and inverse Omega(1/d, S^-1, -S^-1 z / d, -i/d^2).

The pairs (delta, Sigma) and (-delta, -Sigma) give the same matrix and the
same automorphism, so elements are canonicalized to delta > 0 on
construction; negative delta inputs are accepted.  The automorphism fixes
the central algebra generator exactly when delta == 1, and that subgroup
(Sigma semidirect H(n)) is closed under product and inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact import eye, is_exact, max_abs, rat, zeros
from .symplectic import _rational_inverse, sp_check, zeta
from .wh_group import DimensionMismatch, WHElement, wh_element


@dataclass(frozen=True)
class AutElement:
    delta: object
    sigma: np.ndarray  # 2n x 2n symplectic
    z: np.ndarray      # 2n vector
    iota: object

    def __post_init__(self):
        if self.delta == 0:
            raise ValueError("delta must be nonzero")

    @property
    def n(self) -> int:
        return self.sigma.shape[0] // 2

    @property
    def exact(self) -> bool:
        return is_exact(self.sigma)

    def isclose(self, other, tol=1e-12) -> bool:
        return (self.n == other.n
                and abs(self.delta - other.delta) <= tol
                and max_abs(self.sigma - other.sigma) <= tol
                and max_abs(self.z - other.z) <= tol
                and abs(self.iota - other.iota) <= tol)


def aut_element(delta, sigma, z, iota, check=True, tol=1e-10) -> AutElement:
    sigma = np.asarray(sigma)
    z = np.asarray(z)
    if check:
        ok, diag = sp_check(sigma, tol=tol)
        if not ok:
            raise ValueError(f"sigma is not symplectic: residual {diag['defect']}")
    if len(z) != sigma.shape[0]:
        raise DimensionMismatch("z must have length 2n")
    if delta < 0:
        # (delta, Sigma) ~ (-delta, -Sigma): same matrix, same automorphism
        delta, sigma = -delta, -sigma
    return AutElement(delta, sigma, z, iota)


def aut_identity(n, exact=False) -> AutElement:
    one = rat(1) if exact else 1.0
    return AutElement(one, eye(2 * n, exact=exact), zeros(2 * n, exact=exact),
                      rat(0) if exact else 0.0)


def _same_n(a: AutElement, b) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"dimension mismatch: {a.n} != {b.n}")


def _half(exact: bool):
    return rat(1, 2) if exact else 0.5


def aut_product(a: AutElement, b: AutElement) -> AutElement:
    _same_n(a, b)
    zform = zeta(a.n, exact=a.exact)
    cross = a.z @ zform @ (a.sigma @ b.z)
    iota = a.iota + a.delta ** 2 * b.iota + _half(a.exact) * a.delta * cross
    return aut_element(a.delta * b.delta, a.sigma @ b.sigma,
                       a.z + a.delta * (a.sigma @ b.z), iota, check=False)


def aut_inverse(a: AutElement) -> AutElement:
    if a.exact:
        sig_inv = _rational_inverse(a.sigma)
        dinv = rat(1) / a.delta
    else:
        sig_inv = np.linalg.inv(a.sigma)
        dinv = 1.0 / a.delta
    return aut_element(dinv, sig_inv, -dinv * (sig_inv @ a.z),
                       -dinv * dinv * a.iota, check=False)


def aut_to_matrix(a: AutElement) -> np.ndarray:
    n, exact = a.n, a.exact
    m = zeros((2 * n + 2, 2 * n + 2), exact=exact)
    m[:2 * n, :2 * n] = a.delta * a.sigma
    m[:2 * n, 2 * n + 1] = a.z
    m[2 * n, :2 * n] = a.delta * (a.z @ zeta(n, exact=exact) @ a.sigma)
    m[2 * n, 2 * n] = a.delta ** 2
    m[2 * n, 2 * n + 1] = 2 * a.iota
    m[2 * n + 1, 2 * n + 1] = rat(1) if exact else 1.0
    return m


def aut_act_wh(g: AutElement, h: WHElement) -> WHElement:
    """Automorphism action on H(n); extends conjugation by inner elements."""
    _same_n(g, h)
    exact = g.exact
    zform = zeta(g.n, exact=exact)
    zh = np.concatenate([h.p, h.q])
    z_new = g.delta * (g.sigma @ zh)
    iota = g.delta ** 2 * h.iota + g.delta * (g.z @ zform @ (g.sigma @ zh))
    n = g.n
    return WHElement(n, z_new[:n], z_new[n:], iota)


def aut_act_z(g: AutElement, z: np.ndarray, iota):
    """Action on an algebra coefficient pair (z, iota) over span{Z_a, I}.

    The coefficient vector transforms as z -> delta Sigma z and the central
    coefficient as iota -> delta^2 iota + delta z_g^t zeta Sigma z; the iota
    carried by g itself is inert.
    """
    if len(z) != 2 * g.n:
        raise DimensionMismatch("z must have length 2n")
    zform = zeta(g.n, exact=g.exact)
    z_new = g.delta * (g.sigma @ z)
    iota_new = g.delta ** 2 * iota + g.delta * (g.z @ zform @ (g.sigma @ z))
    return z_new, iota_new


def is_central_invariant(g: AutElement) -> bool:
    """True iff the automorphism fixes the central algebra generator (delta == 1)."""
    return g.delta == 1


def aut_to_json(a: AutElement) -> dict:
    return {"delta": float(a.delta),
            "sigma": [[float(v) for v in row] for row in a.sigma],
            "z": [float(v) for v in a.z],
            "iota": float(a.iota)}


def aut_from_json(d: dict) -> AutElement:
    return aut_element(d["delta"], np.array(d["sigma"], dtype=float),
                       np.array(d["z"], dtype=float), float(d["iota"]))
