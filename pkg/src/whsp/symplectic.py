"""Real symplectic matrices Sp(2n) and their triangular factorization.

A 2n x 2n matrix S is symplectic when S^t zeta S = zeta for the skew form

    zeta = [[0, 1_n], [-1_n, 0]].

Every symplectic matrix factors as

    S = lower(gamma) . diag(alpha) . upper(beta) . zeta^eps,   eps in {0, 1}

with beta, gamma symmetric and alpha invertible, where

    upper(beta) = [[1, beta], [0, 1]]
    lower(gamma) = [[1, 0], [gamma, 1]]
    diag(alpha) = [[alpha^-1, 0], [0, alpha^t]].

The eps = 0 patch covers |det S1| >= |det S2| (S1, S2 the top blocks); the
other patch factors S . zeta^-1 instead, which swaps the top blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact import as_float, eye, is_exact, max_abs, zeros


def zeta(n: int, exact=False) -> np.ndarray:
    z = zeros((2 * n, 2 * n), exact=exact)
    id_n = eye(n, exact=exact)
    z[:n, n:] = id_n
    z[n:, :n] = -id_n
    return z


def sp_upper(beta) -> np.ndarray:
    beta = np.asarray(beta)
    n = beta.shape[0]
    m = eye(2 * n, exact=is_exact(beta))
    m[:n, n:] = beta
    return m


def sp_lower(gamma) -> np.ndarray:
    gamma = np.asarray(gamma)
    n = gamma.shape[0]
    m = eye(2 * n, exact=is_exact(gamma))
    m[n:, :n] = gamma
    return m


def sp_diag(alpha) -> np.ndarray:
    alpha = np.asarray(alpha)
    n = alpha.shape[0]
    exact = is_exact(alpha)
    m = zeros((2 * n, 2 * n), exact=exact)
    inv = _rational_inverse(alpha) if exact else np.linalg.inv(alpha)
    m[:n, :n] = inv
    m[n:, n:] = alpha.T
    return m


def _rational_inverse(a) -> np.ndarray:
    """Exact inverse of a rational object-matrix by Gauss-Jordan."""
    from .exact import rat
    n = a.shape[0]
    aug = np.concatenate([a.copy(), eye(n, exact=True)], axis=1)
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r, col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] = aug[col] * (rat(1) / aug[col, col])
        for r in range(n):
            if r != col and aug[r, col] != 0:
                aug[r] = aug[r] - aug[r, col] * aug[col]
    return aug[:, n:]


@dataclass(frozen=True)
class SymplecticMatrix:
    n: int
    m: np.ndarray

    @property
    def blocks(self):
        n = self.n
        return (self.m[:n, :n], self.m[:n, n:], self.m[n:, :n], self.m[n:, n:])

    @property
    def exact(self):
        return is_exact(self.m)


def sp_matrix(m, tol=1e-10) -> SymplecticMatrix:
    m = np.asarray(m)
    ok, diag = sp_check(m, tol=tol)
    if not ok:
        raise ValueError(f"matrix is not symplectic: residual {diag['defect']}")
    return SymplecticMatrix(m.shape[0] // 2, m)


def sp_check(m, tol=1e-10):
    """Test S^t zeta S == zeta; returns (ok, diagnostics).

    Diagnostics report the overall defect and the three block identities
    (S1^t S4 - S3^t S2 = 1, S1^t S3 and S2^t S4 symmetric) separately.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    if m.shape[0] % 2 != 0:
        raise ValueError("symplectic matrices have even size")
    n = m.shape[0] // 2
    exact = is_exact(m)
    z = zeta(n, exact=exact)
    defect = max_abs(m.T @ z @ m - z)
    s1, s2, s3, s4 = m[:n, :n], m[:n, n:], m[n:, :n], m[n:, n:]
    diag = {
        "defect": defect,
        "block_identity": max_abs(s1.T @ s4 - s3.T @ s2 - eye(n, exact=exact)),
        "s1t_s3_asymmetry": max_abs(s1.T @ s3 - (s1.T @ s3).T),
        "s2t_s4_asymmetry": max_abs(s2.T @ s4 - (s2.T @ s4).T),
    }
    limit = 0 if exact else tol
    return defect <= limit, diag


@dataclass(frozen=True)
class SymplecticFactors:
    gamma: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    epsilon: int
    ill_conditioned: bool = False


# determinant floor below which the chosen patch is flagged as ill-conditioned
_DET_FLOOR = 1e-8


def sp_factorize(s, tol=1e-10) -> SymplecticFactors:
    m = s.m if isinstance(s, SymplecticMatrix) else np.asarray(s)
    ok, diag = sp_check(m, tol=tol)
    if not ok:
        raise ValueError(f"matrix is not symplectic: residual {diag['defect']}")
    n = m.shape[0] // 2
    exact = is_exact(m)
    s1, s2 = m[:n, :n], m[:n, n:]
    det1 = abs(np.linalg.det(as_float(s1)))
    det2 = abs(np.linalg.det(as_float(s2)))
    flagged = max(det1, det2) < _DET_FLOOR
    if det1 >= det2:
        eps, t = 0, m
    else:
        # factor S zeta^-1, whose top-left block is S2
        eps, t = 1, m @ (-zeta(n, exact=exact))
    t1, t2, t3 = t[:n, :n], t[:n, n:], t[n:, :n]
    inv1 = _rational_inverse(t1) if exact else np.linalg.inv(t1)
    return SymplecticFactors(gamma=t3 @ inv1, alpha=inv1, beta=inv1 @ t2,
                             epsilon=eps, ill_conditioned=flagged)


def sp_compose_factors(f: SymplecticFactors) -> np.ndarray:
    alpha = np.asarray(f.alpha)
    exact = is_exact(alpha)
    n = alpha.shape[0]
    m = sp_lower(f.gamma) @ sp_diag(alpha) @ sp_upper(f.beta)
    if f.epsilon % 2:
        m = m @ zeta(n, exact=exact)
    return m


def sp_random(n: int, seed: int, steps: int = 6,
              shear_scale=0.4, log_dilation=0.3) -> np.ndarray:
    """Deterministic pseudo-random symplectic matrix.

    Product of `steps` generators drawn among upper/lower shears with
    symmetric entries in [-shear_scale, shear_scale], diagonal dilations with
    log-entries in [-log_dilation, log_dilation], and zeta.  The bounds keep
    the triangular factors of the result small enough that the metaplectic
    operators acting on grid wavefunctions stay inside the box/band aperture.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    m = np.eye(2 * n)
    for _ in range(steps):
        kind = rng.integers(0, 4)
        if kind in (0, 1):
            b = rng.uniform(-shear_scale, shear_scale, size=(n, n))
            b = (b + b.T) / 2
            m = m @ (sp_upper(b) if kind == 0 else sp_lower(b))
        elif kind == 2:
            a = np.diag(np.exp(rng.uniform(-log_dilation, log_dilation, size=n)))
            if n > 1:  # mix the axes with a random rotation
                theta = rng.uniform(-0.4, 0.4)
                rot = np.eye(n)
                rot[0, 0] = rot[1, 1] = np.cos(theta)
                rot[0, 1] = np.sin(theta)
                rot[1, 0] = -np.sin(theta)
                a = rot @ a
            m = m @ sp_diag(a)
        else:
            m = m @ zeta(n)
    return m
