from itertools import combinations

import pytest

from ogrlab import weyl
from ogrlab.errors import InputError
from ogrlab.exact_core import ksubsets, subset_complement
from ogrlab.posets import (
    MixedIncomparablePair,
    PosetElement,
    count_mixed_pairs_formula,
    count_standard_monomials,
    covering_partition_pairs,
    elements,
    incomparable_pairs,
    is_standard_monomial,
    linear_extension,
    mixed_leq,
    p_leq,
    pair_bijection_forward,
    pair_bijection_inverse,
    snake_index,
    young_leq,
)


def Y(*s):
    return PosetElement("Y", tuple(s))


def coY(*s):
    return PosetElement("coY", tuple(s))


def test_young_leq_reflexive():
    assert young_leq((1, 2), (1, 2))


def test_young_leq_componentwise():
    assert young_leq((1, 3), (2, 4))
    assert not young_leq((1, 4), (2, 3))
    assert not young_leq((2, 3), (1, 4))


def test_p_leq_glue_edge():
    # the partition {1,2,3,4} = {1,2} | {3,4} glues [1256] under <12>
    assert p_leq(coY(1, 2, 5, 6), Y(1, 2), 2, 6)


def test_p_leq_incomparable_mixed():
    assert not p_leq(coY(1, 3, 5, 6), Y(1, 2), 2, 6)
    assert not p_leq(Y(1, 2), coY(1, 3, 5, 6), 2, 6)


def test_p_leq_global_minimum():
    for I in ksubsets(6, 2):
        assert p_leq(coY(1, 2, 3, 4), Y(*I), 2, 6)


@pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 7)])
def test_p_leq_partial_order(k, n):
    elems = elements(k, n)
    for a in elems:
        assert p_leq(a, a, k, n)
    for a in elems:
        for b in elems:
            if a != b and p_leq(a, b, k, n) and p_leq(b, a, k, n):
                raise AssertionError(f"antisymmetry fails at {a}, {b}")
    leq = {
        (i, j)
        for i, a in enumerate(elems)
        for j, b in enumerate(elems)
        if p_leq(a, b, k, n)
    }
    for i, j in leq:
        for jj, kk in leq:
            if j == jj:
                assert (i, kk) in leq, "transitivity fails"


@pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 7)])
def test_partition_pairs_are_covers(k, n):
    pairs = covering_partition_pairs(k, n)
    assert len(pairs) == len(list(combinations(range(2 * k), k)))
    elems = elements(k, n)
    for lo, hi in pairs:
        assert p_leq(lo, hi, k, n)
        between = [
            e for e in elems
            if e not in (lo, hi)
            and p_leq(lo, e, k, n) and p_leq(e, hi, k, n)
        ]
        assert not between, f"{lo} < {hi} is not a covering relation"


def test_mixed_pairs_example_entry():
    _, mixed = incomparable_pairs(2, 6)
    assert len(mixed) == 21
    assert MixedIncomparablePair((1, 2), (1, 3, 5, 6), 2) in mixed


def test_mixed_pairs_empty_for_k1():
    _, mixed = incomparable_pairs(1, 6)
    assert mixed == []


@pytest.mark.parametrize(
    "k,n,expected", [(2, 6, 21), (3, 7, 196), (2, 4, 10)]
)
def test_count_formula_values(k, n, expected):
    assert count_mixed_pairs_formula(k, n) == expected


def test_count_formula_rejects_k1():
    with pytest.raises(InputError):
        count_mixed_pairs_formula(1, 4)


def test_bijection_lattice_path_instance():
    T = pair_bijection_forward((1, 3, 6, 7), (2, 3, 7, 8), 8)
    assert T == ((1, 4, 5, 6, 7), (2, 4, 5, 7, 8))
    assert pair_bijection_inverse(*T, 8) == ((1, 3, 6, 7), (2, 3, 7, 8))


def test_bijection_singleton_case():
    T1, T2 = pair_bijection_forward((1,), (1,), 5)
    assert T1 == T2 and len(T1) == 2
    assert not mixed_leq(subset_complement(T1, 5), T2, 2)
    assert pair_bijection_inverse(T1, T2, 5) == ((1,), (1,))


@pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 7)])
def test_bijection_roundtrip_exhaustive(k, n):
    small = ksubsets(n, k - 1)
    domain = [(a, b) for a in small for b in small if young_leq(a, b)]
    images = set()
    for S1, S2 in domain:
        T = pair_bijection_forward(S1, S2, n)
        assert pair_bijection_inverse(*T, n) == (S1, S2)
        images.add(T)
    big = ksubsets(n, k)
    codomain = {
        (T1, T2)
        for T1 in big
        for T2 in big
        if young_leq(T1, T2)
        and not mixed_leq(subset_complement(T1, n), T2, k)
    }
    assert images == codomain


def test_standard_monomial_square_of_minimum():
    assert not is_standard_monomial([(1, 2), (1, 2)], 2, 6)


def test_standard_monomial_example_leading_pair():
    assert not is_standard_monomial([(1, 2), (2, 4)], 2, 6)


def test_standard_monomial_singleton():
    assert is_standard_monomial([(1, 2)], 2, 6)


def test_count_standard_monomials():
    assert count_standard_monomials(2, 6, 2) == 84
    assert count_standard_monomials(2, 6, 1) == 15
    assert count_standard_monomials(2, 5, 2) == weyl.weyl_dim(2, 5, 2)


@pytest.mark.parametrize("k,n", [(1, 4), (2, 5), (2, 6)])
def test_standard_count_matches_weyl_degree3(k, n):
    for ell in (1, 2, 3):
        assert count_standard_monomials(k, n, ell) == weyl.weyl_dim(k, n, ell)


def test_snake_index():
    assert snake_index((1, 2), (1, 3)) == 2
    assert snake_index((2, 3), (1, 2)) is None


@pytest.mark.parametrize("tie", ["colex", "colex_desc", "kind_first"])
def test_linear_extension_respects_order(tie):
    k, n = 2, 6
    ext = linear_extension(k, n, tie)
    pos = {e: i for i, e in enumerate(ext)}
    assert len(ext) == len(elements(k, n))
    for a in ext:
        for b in ext:
            if a != b and p_leq(a, b, k, n):
                assert pos[a] < pos[b]


def test_linear_extensions_distinct():
    exts = {tuple(linear_extension(2, 6, t)) for t in
            ("colex", "colex_desc", "kind_first")}
    assert len(exts) == 3


def test_standard_count_matches_weyl_at_3_7():
    for ell in (1, 2, 3):
        assert count_standard_monomials(3, 7, ell) == weyl.weyl_dim(3, 7, ell)
