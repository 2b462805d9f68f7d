"""The Lie algebra of the symplectic-extended Heisenberg symmetry group.

Basis (1-based indices, n the configuration dimension):

    A_ij  (i, j = 1..n)   gl(n) block-diagonal generators
    B_ij  (i <= j)        symmetric lower-block generators
    C_ij  (i <= j)        symmetric upper-block generators
    P_i, Q_i              translation generators,  [P_i, Q_j] = delta_ij I
    I                     central generator

dimension n^2 + n(n+1) + 2n + 1.  The normative definition of the bracket is
the (2n+2) matrix realization below; the closed-form structure-constant
table shipped here is verified against matrix commutators on every basis
pair (see tests), and the Jacobi identity is checked by full triple
enumeration.  All arithmetic in this module is exact rational.

Matrix realization: with coefficient vector z = (P-coeffs, Q-coeffs) and the
skew form zeta,

    W(z, iota) = [[0, 0, z], [z^t zeta, 0, 2 iota], [0, 0, 0]]   (WH part)

and a symplectic-algebra part S embedded as the top-left 2n block, where

    A_ij -> [[-E_ji, 0], [0, E_ij]],  B_ij -> [[0, 0], [sym_ij, 0]],
    C_ij -> [[0, sym_ij], [0, 0]],    sym_ij = E_ij + E_ji (i != j), E_ii else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .exact import eye, max_abs, rat, zeros
from .symplectic import zeta

Label = tuple


def canonical_label(label: Label) -> Label:
    kind = label[0]
    if kind in ("B", "C"):
        _, i, j = label
        return (kind, min(i, j), max(i, j))
    return label


def basis_labels(n: int) -> list:
    labels = [("A", i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    labels += [("B", i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    labels += [("C", i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    labels += [("P", i) for i in range(1, n + 1)]
    labels += [("Q", i) for i in range(1, n + 1)]
    labels.append(("I",))
    return labels


@dataclass(frozen=True)
class AlgebraBasis:
    n: int
    labels: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(basis_labels(self.n)))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: Label) -> int:
        return self.labels.index(canonical_label(label))


@dataclass(frozen=True)
class AlgebraElement:
    basis: AlgebraBasis
    coeffs: np.ndarray  # object array of rationals, length basis.dim

    def __post_init__(self):
        if len(self.coeffs) != self.basis.dim:
            raise ValueError("coefficient vector length does not match basis")

    def coeff(self, label: Label):
        return self.coeffs[self.basis.index(label)]

    def nonzero(self):
        return {lab: c for lab, c in zip(self.basis.labels, self.coeffs) if c != 0}

    def __add__(self, other):
        return AlgebraElement(self.basis, self.coeffs + other.coeffs)

    def __sub__(self, other):
        return AlgebraElement(self.basis, self.coeffs - other.coeffs)

    def __rmul__(self, scalar):
        out = self.coeffs.copy()
        for i in range(len(out)):
            out[i] = rat(scalar) * out[i]
        return AlgebraElement(self.basis, out)

    def __eq__(self, other):
        return self.basis.n == other.basis.n and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))


def algebra_element(basis: AlgebraBasis, terms: dict) -> AlgebraElement:
    coeffs = zeros(basis.dim, exact=True)
    for label, c in terms.items():
        coeffs[basis.index(label)] += rat(c)
    return AlgebraElement(basis, coeffs)


def basis_element(basis: AlgebraBasis, label: Label) -> AlgebraElement:
    return algebra_element(basis, {label: 1})


# --- closed-form structure constants ----------------------------------------

def _pairs(i, j):
    """Index pairs of sym_ij = sum E_ab: [(i,j),(j,i)] off-diagonal, [(i,i)] else."""
    return [(i, j)] if i == j else [(i, j), (j, i)]


def _add(d, label, coeff):
    if coeff == 0:
        return
    label = canonical_label(label)
    d[label] = d.get(label, rat(0)) + coeff
    if d[label] == 0:
        del d[label]


def _sym_decompose(entries, kind):
    """Fold a symmetric {(a,b): coeff} E-matrix onto the canonical sym basis:
    coeff(sym_ab) = M[a,b] for a < b, coeff(sym_aa) = M[a,a]."""
    out = {}
    for (a, b), c in entries.items():
        if a <= b:
            _add(out, (kind, a, b), c)
    return out


def bracket_basis(x: Label, y: Label) -> dict:
    """[x, y] for basis labels, as {label: rational coefficient}."""
    x, y = canonical_label(x), canonical_label(y)
    kx, ky = x[0], y[0]
    one = rat(1)

    if kx == "I" or ky == "I":
        return {}
    order = {"A": 0, "B": 1, "C": 2, "P": 3, "Q": 4}
    if order[kx] > order[ky]:
        return {lab: -c for lab, c in bracket_basis(y, x).items()}

    out = {}
    if kx == "A" and ky == "A":
        _, i, j = x
        _, k, l = y
        # [A_ij, A_kl] = d_jk A_il - d_il A_kj
        if j == k:
            _add(out, ("A", i, l), one)
        if i == l:
            _add(out, ("A", k, j), -one)
    elif kx == "A" and ky == "B":
        _, i, j = x
        _, k, l = y
        # lower-left block: E_ij sym_kl + sym_kl E_ji (symmetric)
        entries = {}
        for (c_, d_) in _pairs(k, l):
            if j == c_:
                entries[(i, d_)] = entries.get((i, d_), rat(0)) + one
            if d_ == j:
                entries[(c_, i)] = entries.get((c_, i), rat(0)) + one
        out.update(_sym_decompose(entries, "B"))
    elif kx == "A" and ky == "C":
        _, i, j = x
        _, k, l = y
        # upper-right block: -(E_ji sym_kl + sym_kl E_ij) (symmetric)
        entries = {}
        for (c_, d_) in _pairs(k, l):
            if i == c_:
                entries[(j, d_)] = entries.get((j, d_), rat(0)) - one
            if d_ == i:
                entries[(c_, j)] = entries.get((c_, j), rat(0)) - one
        out.update(_sym_decompose(entries, "C"))
    elif kx == "B" and ky == "C":
        _, i, j = x
        _, k, l = y
        # lower-right block of the commutator is sym_ij sym_kl, expanded in E_ab
        for (a, b) in _pairs(i, j):
            for (c_, d_) in _pairs(k, l):
                if b == c_:
                    _add(out, ("A", a, d_), one)
    elif kx == "A" and ky == "P":
        _, i, j = x
        _, k = y
        if i == k:
            _add(out, ("P", j), -one)
    elif kx == "A" and ky == "Q":
        _, i, j = x
        _, k = y
        if j == k:
            _add(out, ("Q", i), one)
    elif kx == "B" and ky == "P":
        _, i, j = x
        _, k = y
        for (a, b) in _pairs(i, j):
            if b == k:
                _add(out, ("Q", a), one)
    elif kx == "C" and ky == "Q":
        _, i, j = x
        _, k = y
        for (a, b) in _pairs(i, j):
            if b == k:
                _add(out, ("P", a), one)
    elif kx == "P" and ky == "Q":
        _, i = x
        _, j = y
        if i == j:
            _add(out, ("I",), one)
    # remaining combinations ([B,B], [C,C], [B,Q], [C,P], [P,P], [Q,Q]) vanish
    return out


@dataclass(frozen=True)
class StructureConstants:
    labels: tuple
    table: dict  # (label_a, label_b) -> {label_c: rational}

    def bracket(self, a: Label, b: Label) -> dict:
        return self.table.get((canonical_label(a), canonical_label(b)), {})


@lru_cache(maxsize=None)
def structure_constants(n: int) -> StructureConstants:
    labels = tuple(basis_labels(n))
    table = {}
    for a in labels:
        for b in labels:
            terms = bracket_basis(a, b)
            if terms:
                table[(a, b)] = terms
    return StructureConstants(labels, table)


def alg_bracket(x: AlgebraElement, y: AlgebraElement,
                sc: StructureConstants = None) -> AlgebraElement:
    if x.basis.n != y.basis.n:
        raise ValueError("basis mismatch")
    basis = x.basis
    if sc is None:
        sc = structure_constants(basis.n)
    coeffs = zeros(basis.dim, exact=True)
    for la, ca in x.nonzero().items():
        for lb, cb in y.nonzero().items():
            for lc, f in sc.bracket(la, lb).items():
                coeffs[basis.index(lc)] += ca * cb * f
    return AlgebraElement(basis, coeffs)


def alg_jacobi_check(sc: StructureConstants):
    """Max Jacobi residual over all basis triples, with the worst triple.

    Residual of (a, b, c) is the max |coefficient| of
    [[a,b],c] + [[b,c],a] + [[c,a],b] expanded through the table.
    """
    worst = rat(0)
    worst_triple = None
    labels = sc.labels
    for a in labels:
        for b in labels:
            ab = sc.bracket(a, b)
            for c in labels:
                acc = {}
                for mid, co in ab.items():
                    for lab, f in sc.bracket(mid, c).items():
                        _add(acc, lab, co * f)
                for mid, co in sc.bracket(b, c).items():
                    for lab, f in sc.bracket(mid, a).items():
                        _add(acc, lab, co * f)
                for mid, co in sc.bracket(c, a).items():
                    for lab, f in sc.bracket(mid, b).items():
                        _add(acc, lab, co * f)
                if acc:
                    r = max(abs(v) for v in acc.values())
                    if r > worst:
                        worst, worst_triple = r, (a, b, c)
    return worst, worst_triple


# --- matrix realization ------------------------------------------------------

def _basis_matrix(n: int, label: Label) -> np.ndarray:
    size = 2 * n + 2
    m = zeros((size, size), exact=True)
    kind = label[0]
    one = rat(1)
    if kind == "I":
        m[2 * n, 2 * n + 1] = rat(2)
        return m
    if kind == "P":
        i = label[1] - 1
        z = zeros(2 * n, exact=True)
        z[i] = one
    elif kind == "Q":
        i = label[1] - 1
        z = zeros(2 * n, exact=True)
        z[n + i] = one
    else:
        s = zeros((2 * n, 2 * n), exact=True)
        if kind == "A":
            _, i, j = label
            s[j - 1, i - 1] = -one          # upper-left  -E_ji
            s[n + i - 1, n + j - 1] = one   # lower-right  E_ij
        else:
            _, i, j = label
            blocks = _pairs(i, j)
            for (a, b) in blocks:
                if kind == "B":
                    s[n + a - 1, b - 1] = s[n + a - 1, b - 1] + one
                else:
                    s[a - 1, n + b - 1] = s[a - 1, n + b - 1] + one
        m[:2 * n, :2 * n] = s
        return m
    m[:2 * n, 2 * n + 1] = z
    m[2 * n, :2 * n] = z @ zeta(n, exact=True)
    return m


def alg_matrix_realization(x: AlgebraElement) -> np.ndarray:
    n = x.basis.n
    m = zeros((2 * n + 2, 2 * n + 2), exact=True)
    for label, c in x.nonzero().items():
        m = m + c * _basis_matrix(n, label)
    return m


def alg_from_matrix(basis: AlgebraBasis, m: np.ndarray) -> AlgebraElement:
    """Decompose a matrix into basis coefficients; rejects non-members."""
    n = basis.n
    terms = {}
    lr = m[n:2 * n, n:2 * n]      # A-coefficients: E_ij block
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            terms[("A", i, j)] = lr[i - 1, j - 1]
    ll = m[n:2 * n, :n]
    ur = m[:n, n:2 * n]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            terms[("B", i, j)] = ll[i - 1, j - 1]
            terms[("C", i, j)] = ur[i - 1, j - 1]
    for i in range(1, n + 1):
        terms[("P", i)] = m[i - 1, 2 * n + 1]
        terms[("Q", i)] = m[n + i - 1, 2 * n + 1]
    terms[("I",)] = m[2 * n, 2 * n + 1] / rat(2)
    elem = algebra_element(basis, {k: v for k, v in terms.items() if v != 0})
    if max_abs(alg_matrix_realization(elem) - m) != 0:
        raise ValueError("matrix is not in the realized algebra")
    return elem


# --- enveloping realization ---------------------------------------------------

def alg_enveloping_realize(label: Label):
    """Quadratic monomial (ordered pair of P/Q symbols) realizing a symplectic
    generator: A_ij -> Q_i P_j, B_ij -> Q_i Q_j, C_ij -> P_i P_j."""
    label = canonical_label(label)
    kind = label[0]
    if kind not in ("A", "B", "C"):
        raise ValueError("only symplectic generators have a quadratic realization")
    _, i, j = label
    if kind == "A":
        return (("Q", i), ("P", j))
    if kind == "B":
        return (("Q", i), ("Q", j))
    return (("P", i), ("P", j))


# --- central extensions -------------------------------------------------------

def _norm_pair(a: Label, b: Label):
    return (canonical_label(a), canonical_label(b))


def extend_with_cocycle(base: StructureConstants, cocycle: dict) -> StructureConstants:
    """Adjoin a central generator I with [X_a, X_b] += c_ab I."""
    labels = tuple(list(base.labels) + [("I",)])
    table = {k: dict(v) for k, v in base.table.items()}
    for (a, b), c in cocycle.items():
        if c == 0:
            continue
        a, b = _norm_pair(a, b)
        for (x, y, s) in ((a, b, rat(c)), (b, a, -rat(c))):
            cur = table.setdefault((x, y), {})
            _add(cur, ("I",), s)
            if not cur:
                del table[(x, y)]
    return StructureConstants(labels, table)


def _rational_solve(rows, rhs):
    """Solve the exact linear system; returns a solution list or None."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    aug = [[rat(v) for v in row] + [rat(r)] for row, r in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = rat(1) / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [vi - f * vr for vi, vr in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    sol = [rat(0)] * ncols
    for row_idx, c in enumerate(pivots):
        sol[c] = aug[row_idx][ncols]
    return sol


def alg_central_extension_check(base: StructureConstants, cocycle: dict) -> str:
    """Classify a candidate central extension of `base`.

    Returns "inconsistent" when the extended constants violate Jacobi,
    "trivial" when the cocycle is a coboundary (c_ab = sum_c f_ab^c lam_c is
    solvable), and "nontrivial" otherwise.
    """
    extended = extend_with_cocycle(base, cocycle)
    residual, _ = alg_jacobi_check(extended)
    if residual != 0:
        return "inconsistent"
    labels = list(base.labels)
    index = {lab: i for i, lab in enumerate(labels)}
    norm_cocycle = {}
    for (a, b), c in cocycle.items():
        norm_cocycle[_norm_pair(a, b)] = rat(c)
    rows, rhs = [], []
    for ia, a in enumerate(labels):
        for b in labels[ia + 1:]:
            row = [rat(0)] * len(labels)
            for lc, f in base.bracket(a, b).items():
                row[index[lc]] += f
            target = norm_cocycle.get((a, b), rat(0)) - norm_cocycle.get((b, a), rat(0))
            if any(v != 0 for v in row) or target != 0:
                rows.append(row)
                rhs.append(target)
    if not rows:
        return "trivial"
    return "trivial" if _rational_solve(rows, rhs) is not None else "nontrivial"


def isp_structure_constants(n: int) -> StructureConstants:
    """The quotient with [P, Q] = 0: symplectic algebra acting on abelian
    translations (the classical inhomogeneous symmetry algebra)."""
    full = structure_constants(n)
    labels = tuple(lab for lab in full.labels if lab != ("I",))
    table = {}
    for (a, b), terms in full.table.items():
        if a == ("I",) or b == ("I",):
            continue
        kept = {lab: c for lab, c in terms.items() if lab != ("I",)}
        if kept:
            table[(a, b)] = kept
    return StructureConstants(labels, table)


def abelian_structure_constants(k: int) -> StructureConstants:
    labels = tuple(("P", i) for i in range(1, k + 1))
    return StructureConstants(labels, {})


def heisenberg_cocycle(n: int) -> dict:
    return {(("P", i), ("Q", i)): rat(1) for i in range(1, n + 1)}


# --- action of the automorphism group on span{P, Q, I} ------------------------

def aut_act_algebra(g, w: AlgebraElement) -> AlgebraElement:
    """Automorphism action on the Weyl-Heisenberg span; rejects support on
    the symplectic generators."""
    from .aut_group import aut_act_z
    basis = w.basis
    n = basis.n
    bad = [lab for lab in w.nonzero() if lab[0] in ("A", "B", "C")]
    if bad:
        raise ValueError(f"support outside span{{P, Q, I}}: {bad}")
    z = zeros(2 * n, exact=True)
    for i in range(1, n + 1):
        z[i - 1] = w.coeff(("P", i))
        z[n + i - 1] = w.coeff(("Q", i))
    z_new, iota_new = aut_act_z(g, z, w.coeff(("I",)))
    terms = {("I",): iota_new}
    for i in range(1, n + 1):
        terms[("P", i)] = z_new[i - 1]
        terms[("Q", i)] = z_new[n + i - 1]
    return algebra_element(basis, {k: v for k, v in terms.items() if v != 0})


def export_structure_constants(sc: StructureConstants) -> dict:
    """Sparse JSON form: [[a, b, c, num, den], ...]."""
    entries = []
    for (a, b), terms in sorted(sc.table.items()):
        for c, v in sorted(terms.items()):
            from fractions import Fraction
            f = Fraction(str(v))
            entries.append([list(a), list(b), list(c), f.numerator, f.denominator])
    return {"labels": [list(lab) for lab in sc.labels], "entries": entries}
