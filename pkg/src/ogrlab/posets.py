"""The doubled Young poset on k-subsets and (n-k)-subsets of [n].

One copy of Young's lattice indexes Plucker variables, a second copy indexes
their complements; the two are glued by covering relations coming from
partitions of {1..2k}.  Incomparable pairs in the glued poset are exactly
the leading monomials of the degree-2 straightening laws, so this module
also owns standard-monomial tests and the pair-counting bijection.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .errors import InputError, InternalInvariantError, SizeMismatchError
from .exact_core import binom, colex_key, ksubsets, subset_complement


@dataclass(frozen=True)
class PosetElement:
    kind: str  # "Y" or "coY"
    subset: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "set": list(self.subset)}


@dataclass(frozen=True)
class MixedIncomparablePair:
    """A Young/co-Young incomparable pair whose complements compare in Y.

    snake_index is the least column at which the two-row tableau built from
    (coyoung over young) fails to be semistandard.
    """

    young: tuple[int, ...]
    coyoung: tuple[int, ...]
    snake_index: int


def young_leq(I, J) -> bool:
    """Componentwise order on same-size sorted subsets."""
    if len(I) != len(J):
        raise SizeMismatchError("young_leq needs equal-size subsets")
    return all(a <= b for a, b in zip(I, J))


def mixed_leq(Jp, I, k: int) -> bool:
    """coYoung element [Jp] below Young element <I>: j'_l <= i_l for l <= k."""
    return all(Jp[l] <= I[l] for l in range(k))


def p_leq(a: PosetElement, b: PosetElement, k: int, n: int) -> bool:
    """Order relation of the glued poset.

    Young and coYoung copies are each ordered componentwise; a coYoung
    element sits below a Young element when its first k entries are
    componentwise at most the Young entries.  Young elements are never
    below coYoung ones.
    """
    for e in (a, b):
        want = k if e.kind == "Y" else n - k
        if e.kind not in ("Y", "coY"):
            raise InputError(f"bad poset element kind {e.kind!r}")
        if len(e.subset) != want or any(x < 1 or x > n for x in e.subset):
            raise InputError(f"element {e} does not live in the ({k},{n}) poset")
    if a.kind == b.kind:
        return young_leq(a.subset, b.subset)
    if a.kind == "coY" and b.kind == "Y":
        return mixed_leq(a.subset, b.subset, k)
    return False


def elements(k: int, n: int) -> list[PosetElement]:
    out = [PosetElement("coY", s) for s in ksubsets(n, n - k)]
    out += [PosetElement("Y", s) for s in ksubsets(n, k)]
    return out


def snake_index(I, upper) -> int | None:
    """Least l with i_l < u_l, i.e. the non-semistandard column; None if none."""
    for l in range(len(I)):
        if I[l] < upper[l]:
            return l + 1
    return None


def covering_partition_pairs(k: int, n: int) -> list[tuple[PosetElement, PosetElement]]:
    """The C(2k, k) glue relations [complement of J] < <I> from {1..2k} = I | J."""
    out = []
    for I in combinations(range(1, 2 * k + 1), k):
        J = tuple(x for x in range(1, 2 * k + 1) if x not in I)
        Jp = subset_complement(J, n)
        out.append((PosetElement("coY", Jp), PosetElement("Y", I)))
    return out


def young_incomparable_pairs(k: int, n: int) -> list[tuple[tuple, tuple]]:
    """Unordered incomparable pairs in one copy of Young's lattice."""
    subs = ksubsets(n, k)
    out = []
    for i, I in enumerate(subs):
        for J in subs[i + 1:]:
            if not young_leq(I, J) and not young_leq(J, I):
                out.append((I, J))
    return out


def incomparable_pairs(k: int, n: int):
    """Incomparable pairs driving the degree-2 count.

    Returns (young_young, mixed) where young_young lists unordered
    incomparable Young pairs and mixed lists the pairs (<I>, [J']) that are
    incomparable although I and the complement of J' compare in Y, oriented
    so that I <= complement(J').  The mixed list is empty for k = 1: the
    counting bijection degenerates there (no (k-1)-row tableaux), though the
    lone quadratic obstruction is still caught by is_standard_monomial.
    """
    if k < 1 or n < 2 * k:
        raise InputError("need n >= 2k >= 2")
    mixed = []
    if k >= 2:
        subs = ksubsets(n, k)
        for I in subs:
            for J in subs:
                if not young_leq(I, J):
                    continue
                Jp = subset_complement(J, n)
                if mixed_leq(Jp, I, k):
                    continue
                l = snake_index(I, Jp[:k])
                if l is None:
                    raise InternalInvariantError("incomparable pair without a snake")
                mixed.append(MixedIncomparablePair(young=I, coyoung=Jp, snake_index=l))
    return young_incomparable_pairs(k, n), mixed


def count_mixed_pairs_formula(k: int, n: int) -> int:
    """Closed form C(n+1,k)*C(n,k-2)/(k-1) for the mixed-pair count."""
    if k < 2:
        raise InputError("mixed-pair formula needs k >= 2")
    if n < 2 * k:
        raise InputError("need n >= 2k")
    val = Fraction(binom(n + 1, k) * binom(n, k - 2), k - 1)
    if val.denominator != 1:
        raise InternalInvariantError("mixed-pair formula not integral")
    return int(val)


# ---------------------------------------------------------------------------
# The counting bijection behind the mixed-pair formula
# ---------------------------------------------------------------------------

def _cut(S, h):
    return tuple(x for x in S if x <= h)


def pair_bijection_forward(S1, S2, n: int):
    """Map a comparable (k-1)-subset pair to a k-subset pair (T1, T2) with
    T1 <= T2 and complement(T1) not below T2.

    Swaps the shared elements below a cutoff h for the shared non-elements,
    where h is minimal with fewer shared elements than shared non-elements.
    """
    S1, S2 = tuple(S1), tuple(S2)
    if len(S1) != len(S2):
        raise SizeMismatchError("sets must have equal size")
    if not young_leq(S1, S2):
        raise InputError("need S1 <= S2 componentwise")
    L = tuple(sorted(set(S1) & set(S2)))
    R = tuple(sorted(set(subset_complement(S1, n)) & set(subset_complement(S2, n))))
    h = None
    for cand in range(1, n + 1):
        if len(_cut(L, cand)) < len(_cut(R, cand)):
            h = cand
            break
    if h is None:
        raise InternalInvariantError("cutoff must exist since |R| exceeds |L|")
    Lh, Rh = set(_cut(L, h)), set(_cut(R, h))
    T1 = tuple(sorted((set(S1) - Lh) | Rh))
    T2 = tuple(sorted((set(S2) - Lh) | Rh))
    k = len(S1) + 1
    if len(T1) != k or len(T2) != k or not young_leq(T1, T2):
        raise InternalInvariantError("forward bijection produced a bad pair")
    if mixed_leq(subset_complement(T1, n), T2, k):
        raise InternalInvariantError("forward image is not mixed-obstructed")
    return T1, T2


def pair_bijection_inverse(T1, T2, n: int):
    """Inverse construction: back to the comparable (k-1)-subset pair."""
    T1, T2 = tuple(T1), tuple(T2)
    if len(T1) != len(T2):
        raise SizeMismatchError("sets must have equal size")
    k = len(T1)
    if not young_leq(T1, T2):
        raise InputError("need T1 <= T2 componentwise")
    if mixed_leq(subset_complement(T1, n), T2, k):
        raise InputError("pair is not mixed-obstructed; not in the image")
    L = tuple(sorted(set(T1) & set(T2)))
    R = tuple(sorted(set(subset_complement(T1, n)) & set(subset_complement(T2, n))))
    h = None
    for cand in range(1, n + 1):
        if len(_cut(L, cand)) > len(_cut(R, cand)):
            h = cand
            break
    if h is None:
        raise InternalInvariantError("cutoff must exist for an obstructed pair")
    Lh, Rh = set(_cut(L, h)), set(_cut(R, h))
    S1 = tuple(sorted((set(T1) - Lh) | Rh))
    S2 = tuple(sorted((set(T2) - Lh) | Rh))
    if len(S1) != k - 1 or not young_leq(S1, S2):
        raise InternalInvariantError("inverse bijection produced a bad pair")
    return S1, S2


# ---------------------------------------------------------------------------
# Standard monomials
# ---------------------------------------------------------------------------

def _pair_is_standard(A, B, n: int) -> bool:
    if not (young_leq(A, B) or young_leq(B, A)):
        return False
    k = len(A)
    if not mixed_leq(subset_complement(B, n), A, k):
        return False
    if not mixed_leq(subset_complement(A, n), B, k):
        return False
    return True


def is_standard_monomial(factors, k: int, n: int) -> bool:
    """True when no two factors (with multiplicity) form an initial pair.

    A pair obstructs either by Young-incomparability or by one factor being
    incomparable with the complement of the other in the glued poset.
    """
    fs = [tuple(f) for f in factors]
    if not fs:
        raise InputError("empty monomial")
    for f in fs:
        if len(f) != k or any(x < 1 or x > n for x in f):
            raise InputError(f"factor {f} is not a k-subset of [n]")
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if not _pair_is_standard(fs[i], fs[j], n):
                return False
    return True


def count_standard_monomials(k: int, n: int, ell: int) -> int:
    """Count degree-ell standard monomials by direct multiset enumeration."""
    if ell < 1:
        raise InputError("degree must be at least 1")
    subs = ksubsets(n, k)
    count = 0
    for combo in combinations_with_replacement(subs, ell):
        ok = True
        for i in range(ell):
            for j in range(i + 1, ell):
                if not _pair_is_standard(combo[i], combo[j], n):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Linear extensions (term orders are built on these)
# ---------------------------------------------------------------------------

def linear_extension(k: int, n: int, tie_break: str = "colex") -> list[PosetElement]:
    """A linear extension of the glued poset by repeated minimal removal.

    tie_break picks among currently-minimal elements: 'colex' and
    'colex_desc' order by the subset key, 'kind_first' exhausts coYoung
    minima before Young ones.  Different ties give genuinely different
    extensions, which the degree-2 checks exercise.
    """
    elems = elements(k, n)
    remaining = set(range(len(elems)))
    below = {
        i: {
            j
            for j in range(len(elems))
            if j != i and p_leq(elems[j], elems[i], k, n)
        }
        for i in range(len(elems))
    }

    def key(i):
        e = elems[i]
        if tie_break == "colex":
            return (0, colex_key(e.subset), e.kind)
        if tie_break == "colex_desc":
            return (0,) + tuple(-x for x in colex_key(e.subset)) + (e.kind,)
        if tie_break == "kind_first":
            return (0 if e.kind == "coY" else 1, colex_key(e.subset))
        raise InputError(f"unknown tie_break {tie_break!r}")

    out = []
    while remaining:
        minimal = [i for i in remaining if not (below[i] & remaining)]
        pick = min(minimal, key=key)
        out.append(elems[pick])
        remaining.remove(pick)
    return out
