"""Quadratic forms, Plucker vectors, and exact sampling of isotropic planes.

Sampling works in a hyperbolic chart: the free entries of [Id | X] determine
the remaining corner entries linearly, after which an exact change of basis
carries the hyperbolic form to the requested one.  Points produced this way
satisfy every defining quadric with zero residual, which the generator
modules rely on for vanishing tests.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateInputError,
    EmptinessError,
    InputError,
    NotAPointError,
    SizeMismatchError,
    UnsupportedFormError,
)
from .exact_core import (
    GaussianRational,
    I_UNIT,
    Mat,
    eps,
    fraction_str,
    ksubsets,
    minors,
    rand_rational,
    subset_complement,
)


@dataclass(frozen=True)
class QuadraticForm:
    """Nondegenerate symmetric bilinear form: a +/-1 diagonal or the
    antidiagonal (split hyperbolic) matrix."""

    n: int
    diag: tuple[int, ...] | None  # None means antidiagonal of ones
    label: str

    @classmethod
    def standard(cls, n: int) -> "QuadraticForm":
        return cls(n, (1,) * n, "standard")

    @classmethod
    def alternating(cls, n: int) -> "QuadraticForm":
        return cls(n, tuple((-1) ** i for i in range(n)), "alternating")

    @classmethod
    def signed_subset(cls, flipped, n: int) -> "QuadraticForm":
        s = set(flipped)
        if not s <= set(range(1, n + 1)):
            raise InputError("sign subset must lie in [1, n]")
        return cls(n, tuple(-1 if i in s else 1 for i in range(1, n + 1)),
                   f"signed{sorted(s)}")

    @classmethod
    def hyperbolic(cls, n: int) -> "QuadraticForm":
        return cls(n, None, "hyperbolic")

    @classmethod
    def from_diagonal(cls, diag) -> "QuadraticForm":
        d = tuple(diag)
        if any(x not in (1, -1) for x in d):
            raise InputError("diagonal entries must be +1 or -1")
        return cls(len(d), d, "diagonal")

    def matrix(self) -> Mat:
        n = self.n
        if self.diag is not None:
            return Mat.diagonal(self.diag)
        return Mat([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])

    def signature_split(self) -> bool:
        """True when the real signature allows maximal isotropic subspaces."""
        if self.diag is None:
            return True
        plus = sum(1 for d in self.diag if d == 1)
        return abs(2 * plus - self.n) <= 1


class PluckerVector:
    """Projective coordinates of a k-plane: map from k-subsets to scalars."""

    __slots__ = ("k", "n", "coords")

    def __init__(self, k: int, n: int, coords: dict):
        self.k = k
        self.n = n
        self.coords = {tuple(I): v for I, v in coords.items() if v != 0}
        if not self.coords:
            raise DegenerateInputError("identically zero Plucker vector")

    @classmethod
    def from_matrix(cls, matrix: Mat) -> "PluckerVector":
        k = matrix.nrows
        return cls(k, matrix.ncols, minors(matrix, k))

    def get(self, I):
        return self.coords.get(tuple(I), Fraction(0))

    def support(self):
        return frozenset(self.coords)

    def scale(self, c) -> "PluckerVector":
        return PluckerVector(self.k, self.n, {I: c * v for I, v in self.coords.items()})

    def normalized(self) -> "PluckerVector":
        """Scale so the first nonzero coordinate in colex order equals 1."""
        for I in ksubsets(self.n, self.k):
            v = self.coords.get(I)
            if v:
                return self.scale(1 / v)
        raise DegenerateInputError("zero vector")

    def eq_projective(self, other: "PluckerVector") -> bool:
        if (self.k, self.n) != (other.k, other.n):
            return False
        a, b = self.normalized(), other.normalized()
        return a.coords == b.coords

    def to_json(self) -> dict:
        coords = {}
        for I in ksubsets(self.n, self.k):
            coords[json.dumps(list(I), separators=(",", ":"))] = fraction_str(
                self.coords.get(I, Fraction(0))
            )
        return {"k": self.k, "n": self.n, "coords": coords}

    def __repr__(self):
        inner = ", ".join(
            f"{''.join(map(str, I))}: {v}" for I, v in sorted(self.coords.items())
        )
        return f"PluckerVector({self.k},{self.n}; {inner})"


@dataclass
class Subspace:
    """A k-plane given by a k x n basis matrix of full row rank."""

    basis: Mat

    def __post_init__(self):
        if self.basis.rank() != self.basis.nrows:
            raise DegenerateInputError("basis matrix is rank-deficient")

    @property
    def k(self):
        return self.basis.nrows

    @property
    def n(self):
        return self.basis.ncols

    def plucker(self) -> PluckerVector:
        return PluckerVector.from_matrix(self.basis)


# ---------------------------------------------------------------------------
# Cocircuit matrix and the orthogonality residual
# ---------------------------------------------------------------------------

def cocircuit_matrix(p: PluckerVector) -> Mat:
    """Rows indexed by (k-1)-subsets I in colex order; entry at column l is
    eps(I, l) * p_{I + l}, and 0 for l in I."""
    k, n = p.k, p.n
    rows = []
    for I in ksubsets(n, k - 1):
        row = []
        for l in range(1, n + 1):
            if l in I:
                row.append(Fraction(0))
            else:
                s = eps(I, l)
                row.append(s * p.get(tuple(sorted(I + (l,)))))
        rows.append(row)
    return Mat(rows)


def orthogonality_residual(p: PluckerVector, form: QuadraticForm) -> Mat:
    """P * Omega * P^T; the zero matrix exactly when p lies on the isotropic
    Grassmannian of the form."""
    if form.n != p.n:
        raise SizeMismatchError("form dimension does not match the vector")
    P = cocircuit_matrix(p)
    return P * form.matrix() * P.transpose()


# ---------------------------------------------------------------------------
# Exact sampling
# ---------------------------------------------------------------------------

def _congruence_to_antidiagonal(form: QuadraticForm, field: str) -> Mat:
    """Rows m_1..m_n with m_s Omega m_t^T equal to the antidiagonal form.

    Rational pairing matches plus-coordinates with minus-coordinates in
    index order (for the alternating form this is the fixed (1,2), (3,4),
    ... pairing, with an odd leftover mapping to the middle).  Over the
    Gaussian rationals same-sign pairs are fixed up with i-scalings.
    """
    n = form.n
    if form.diag is None:
        return Mat.identity(n)
    diag = form.diag
    if field == "rational":
        if not form.signature_split():
            raise UnsupportedFormError(
                f"form {form.label} is not split over the reals; "
                "no rational isotropic sampling"
            )
        if sum(diag) < 0:
            diag = tuple(-d for d in diag)  # same isotropic subspaces
        plus = [i for i, d in enumerate(diag) if d == 1]
        minus = [i for i, d in enumerate(diag) if d == -1]
        pairs = list(zip(plus, minus))
        leftover = plus[len(minus):]
        one = Fraction(1)
    else:
        if field != "gaussian":
            raise InputError(f"unknown field {field!r}")
        idx = list(range(n))
        pairs = [(idx[2 * t], idx[2 * t + 1]) for t in range(n // 2)]
        leftover = idx[n - 1:] if n % 2 else []
        one = Fraction(1)

    rows = [[Fraction(0)] * n for _ in range(n)]

    def put(r, pos, val):
        rows[r][pos] = val

    half = Fraction(1, 2)
    for t, (a, b) in enumerate(pairs):
        da, db = diag[a], diag[b]
        if (da, db) == (-1, 1):
            a, b = b, a
            da, db = db, da
        if (da, db) == (1, -1):
            put(t, a, one)
            put(t, b, one)
            put(n - 1 - t, a, half)
            put(n - 1 - t, b, -half)
        elif (da, db) == (1, 1):
            put(t, a, one)
            put(t, b, I_UNIT)
            put(n - 1 - t, a, half)
            put(n - 1 - t, b, -I_UNIT * half)
        else:  # (-1, -1)
            put(t, a, I_UNIT)
            put(t, b, one)
            put(n - 1 - t, a, I_UNIT * half)
            put(n - 1 - t, b, -half)
    if leftover:
        c = leftover[0]
        mid = n // 2
        put(mid, c, one if diag[c] == 1 else I_UNIT)

    M = Mat(rows)
    target = QuadraticForm.hyperbolic(n).matrix()
    if M * form.matrix() * M.transpose() != target:
        raise UnsupportedFormError(
            f"no exact congruence from {form.label} to the split form over "
            f"the {field}s"
        )
    return M


def sample_isotropic(k: int, n: int, form: QuadraticForm, seed: int,
                     field: str = "rational") -> Subspace:
    """Seeded random isotropic k-plane for the given form, exact.

    Free entries of the hyperbolic chart [Id | X] are drawn as small
    rationals; the lower-right corner of X is then solved exactly, and the
    congruence from the hyperbolic form to `form` is applied.
    """
    if n < 2 * k:
        raise EmptinessError(f"no isotropic {k}-planes in {n}-space")
    if form.n != n:
        raise SizeMismatchError("form dimension mismatch")
    rng = random.Random(seed)
    w = n - k
    c = n + 1 - k
    X = [[Fraction(0)] * w for _ in range(k)]
    for i in range(1, k + 1):
        for j in range(1, w + 1):
            if i + j <= n - k:
                X[i - 1][j - 1] = rand_rational(rng)

    def q_term(r, s):
        total = Fraction(0)
        for j in range(1, n - 2 * k + 1):
            total += X[r - 1][j - 1] * X[s - 1][n + 1 - 2 * k - j - 1]
        return total

    for r in range(1, k + 1):
        X[r - 1][c - r - 1] = -q_term(r, r) / 2
    for r in range(1, k + 1):
        for s in range(r + 1, k + 1):
            X[s - 1][c - r - 1] = -X[r - 1][c - s - 1] - q_term(r, s)

    chart = Mat([[1 if i == j else 0 for j in range(k)] + X[i] for i in range(k)])
    M = _congruence_to_antidiagonal(form, field)
    return Subspace(chart * M)


def sample_isotropic_component(k: int, seed: int, component: str = "standard",
                               field: str = "rational") -> Subspace:
    """Random isotropic k-plane in 2k-space (alternating form) lying on the
    requested component; negating the first coordinate swaps components."""
    if component not in ("standard", "twisted"):
        raise InputError("component must be 'standard' or 'twisted'")
    form = QuadraticForm.alternating(2 * k)
    sub = sample_isotropic(k, 2 * k, form, seed, field)
    if component_of(sub.plucker()) == component:
        return sub
    flipped = Mat([[-row[0]] + row[1:] for row in (sub.basis.row(i) for i in range(k))])
    sub2 = Subspace(flipped)
    if component_of(sub2.plucker()) != component:
        raise NotAPointError("component flip failed")
    return sub2


# ---------------------------------------------------------------------------
# Hodge complement, components, nonnegativity
# ---------------------------------------------------------------------------

def orthogonal_complement(V: Subspace, form: QuadraticForm) -> Subspace:
    """The (n-k)-plane of vectors pairing to zero with V under the form."""
    if form.n != V.n:
        raise SizeMismatchError("form dimension mismatch")
    kernel = (V.basis * form.matrix()).nullspace()
    if len(kernel) != V.n - V.k:
        raise DegenerateInputError("complement has unexpected dimension")
    return Subspace(Mat(kernel))


def hodge_complement(V: Subspace) -> Subspace:
    """Complement with respect to the alternating form."""
    return orthogonal_complement(V, QuadraticForm.alternating(V.n))


def hodge_check(V: Subspace):
    """Verify q_J = p_{complement of J} up to one global scalar.

    Returns (True, scalar) on success and (False, offending subset) on
    failure; the identity holds for every subspace, isotropic or not.
    """
    p = V.plucker()
    q = hodge_complement(V).plucker()
    n, k = V.n, V.k
    scalar = None
    for J in ksubsets(n, n - k):
        qv = q.get(J)
        pv = p.get(subset_complement(J, n))
        if scalar is None:
            if (qv == 0) != (pv == 0):
                return False, J
            if qv != 0:
                scalar = qv / pv
        else:
            if qv != scalar * pv:
                return False, J
    return True, scalar


def complementary_ratio_sign(k: int, flipped_subset) -> int:
    """Square of the ratio of complementary coordinates on (k, 2k):
    +1 when |S| + k is even (ratios are +-1), -1 otherwise (+-sqrt(-1))."""
    return (-1) ** (len(tuple(flipped_subset)) + k)


def component_of(p: PluckerVector) -> str:
    """Which connected component of the n = 2k isotropic Grassmannian:
    'standard' when p_I = p_{I^c} throughout, 'twisted' for the sign flip."""
    if p.n != 2 * p.k:
        raise InputError("components are defined only for n = 2k")
    sign = None
    for I in ksubsets(p.n, p.k):
        a = p.get(I)
        b = p.get(subset_complement(I, p.n))
        if (a == 0) != (b == 0):
            raise NotAPointError("coordinates do not pair up; not on the variety")
        if a == 0:
            continue
        ratio = a / b
        if ratio == 1:
            here = 1
        elif ratio == -1:
            here = -1
        else:
            raise NotAPointError(f"complementary ratio {ratio!r} is not +-1")
        if sign is None:
            sign = here
        elif sign != here:
            raise NotAPointError("inconsistent complementary signs")
    if sign is None:
        raise NotAPointError("no nonzero complementary pair")
    return "standard" if sign == 1 else "twisted"


def swap_component(p: PluckerVector) -> PluckerVector:
    """Image under the reflection negating the first coordinate; exchanges
    the standard and twisted components."""
    return PluckerVector(
        p.k, p.n, {I: (-v if 1 in I else v) for I, v in p.coords.items()}
    )


def is_totally_nonnegative(p: PluckerVector) -> bool:
    """All coordinates >= 0 or all <= 0 (non-real coordinates fail)."""
    vals = list(p.coords.values())
    for v in vals:
        if isinstance(v, GaussianRational):
            if v.im != 0:
                return False
    signs = {1 if v > 0 else -1 for v in (_real(v) for v in vals) if v != 0}
    return len(signs) <= 1


def _real(v):
    return v.re if isinstance(v, GaussianRational) else v
