import random
from fractions import Fraction

import pytest

from ogrlab.errors import InputError
from ogrlab.exact_core import Mat
from ogrlab.forms_points import (
    PluckerVector,
    QuadraticForm,
    is_totally_nonnegative,
    orthogonality_residual,
)
from ogrlab.orthopositroids import (
    DecoratedPermutation,
    Positroid,
    a_sets,
    bridge_decomposition,
    bridge_matrix,
    cell_dim_in_ogr_numeric,
    dims_report,
    dperm_from_necklace,
    edge_e,
    enumerate_orthopositroids,
    enumerate_positroids,
    gluing_check,
    is_orthopositroid,
    m_sigma,
    m_tau,
    necklace_of,
    printed_e1,
    relabel_bases,
    sample_cell_point,
    tau_solution,
    top_cell_dperm,
)

ALT6 = QuadraticForm.alternating(6)

M1 = frozenset([(1, 2), (1, 4), (2, 5), (4, 5)])
M2 = frozenset([(1, 2), (1, 3), (2, 4), (3, 4)])


def test_decorated_permutation_type():
    dp = DecoratedPermutation((4, 3, 2, 1, 5), frozenset())
    assert dp.type_k() == 2
    dp2 = DecoratedPermutation((1, 2), frozenset({1}))
    assert dp2.type_k() == 1


def test_decorated_permutation_validation():
    with pytest.raises(InputError):
        DecoratedPermutation((2, 2, 3), frozenset())
    with pytest.raises(InputError):
        DecoratedPermutation((2, 1), frozenset({1}))


def test_necklace_of_top_cell():
    dp = top_cell_dperm(2, 4)
    assert necklace_of(dp) == ((1, 2), (2, 3), (3, 4), (1, 4))


def test_oh_rule_round_trip_through_bases():
    pos = Positroid.from_bases(M2, 2, 5)
    assert pos.dperm.word == (4, 3, 2, 1, 5)
    assert pos.dperm.coloops == frozenset()
    assert pos.bases == M2
    assert dperm_from_necklace(pos.necklace, 5) == pos.dperm


def test_from_bases_rejects_non_positroid():
    # two disjoint bases cannot satisfy the exchange axiom
    with pytest.raises(InputError):
        Positroid.from_bases({(1, 2), (3, 4)}, 2, 5)


def test_a_sets_second_family():
    assert a_sets(M2, (1,), (4,), 5) == ((2,), (3,))


def test_a_sets_first_family_one_sided():
    plus, minus = a_sets(M1, (2,), (4,), 5)
    assert (not plus) != (not minus)
    assert set(plus) | set(minus) == {1, 5}


def test_a_sets_empty_both_sides():
    assert a_sets(M2, (5,), (5,), 5) == ((), ())


def test_example_verdicts():
    assert not is_orthopositroid(M1, 2, 5).verdict
    assert is_orthopositroid(M2, 2, 5).verdict


def test_enumerate_positroids_small_counts():
    assert len(enumerate_positroids(1, 2)) == 3
    assert len(enumerate_positroids(2, 4)) == 33


def test_enumerate_positroids_distinct_bases():
    ps = enumerate_positroids(2, 5)
    assert len({p.bases for p in ps}) == len(ps)


def test_orthopositroid_counts():
    assert len(enumerate_orthopositroids(2, 6)) == 99
    assert len(enumerate_orthopositroids(2, 5)) == 15


def test_line_case_orthopositroids_match_cells():
    from ogrlab.ogr1 import cells

    for n in (4, 5, 6):
        assert len(enumerate_orthopositroids(1, n)) == len(cells(n))


def test_uniform_positroid_is_ortho():
    top = Positroid.from_dperm(top_cell_dperm(2, 6))
    assert len(top.bases) == 15
    assert is_orthopositroid(top).verdict


def test_symmetry_closure_of_the_99():
    fams = {p.bases for p in enumerate_orthopositroids(2, 6)}
    rot2 = {i: (i - 1 + 2) % 6 + 1 for i in range(1, 7)}
    refl = {1: 1, 2: 6, 3: 5, 4: 4, 5: 3, 6: 2}
    for mapping in (rot2, refl):
        assert {relabel_bases(b, mapping) for b in fams} == fams


@pytest.mark.parametrize("k,n", [(1, 4), (2, 4), (2, 5), (2, 6)])
def test_bridge_matrix_realizes_every_positroid(k, n):
    rng = random.Random(31 * k + n)
    for pos in enumerate_positroids(k, n):
        decomp = bridge_decomposition(pos.dperm)
        vals = [Fraction(rng.randint(1, 9), rng.randint(1, 9))
                for _ in range(decomp.dim)]
        pv = PluckerVector.from_matrix(bridge_matrix(decomp, vals))
        assert pv.support() == pos.bases
        assert is_totally_nonnegative(pv)


def test_bridge_top_cell_dimension():
    for (k, n) in [(2, 4), (2, 6), (3, 6)]:
        assert bridge_decomposition(top_cell_dperm(k, n)).dim == k * (n - k)


def test_sample_cell_point_matroid():
    for idx, pos in enumerate(enumerate_orthopositroids(2, 6)[::10]):
        sub = sample_cell_point(pos, seed=idx)
        assert PluckerVector.from_matrix(sub.basis).support() == pos.bases


def test_cell_dim_top_cell():
    top = Positroid.from_dperm(top_cell_dperm(2, 6))
    res = cell_dim_in_ogr_numeric(top, seed=0)
    assert not res.failed
    assert res.dim == 5
    assert res.param_count == 8


def test_cell_dim_triangle_family():
    sigma_bases = frozenset(
        I for I in PluckerVector.from_matrix(
            Mat([[1, 1, 0, 0, -1, -1], [0, 0, 1, 1, 2, 2]])
        ).support()
    )
    pos = Positroid.from_bases(sigma_bases, 2, 6)
    res = cell_dim_in_ogr_numeric(pos, seed=3)
    assert res.dim == 2


def test_cell_dim_square_family():
    tau_bases = frozenset(
        tuple(sorted((i, j))) for i in (1, 2) for j in (3, 4, 5, 6)
    )
    pos = Positroid.from_bases(tau_bases, 2, 6)
    res = cell_dim_in_ogr_numeric(pos, seed=4)
    assert res.dim == 2


def test_dims_report_matches_expected_histogram():
    rep = dims_report(2, 6, seed=0)
    assert rep["resolved"] == rep["total"] == 99
    assert rep["histogram"] == {"5": 1, "4": 6, "3": 18, "2": 29, "1": 30, "0": 15}


def test_m_sigma_isotropic_and_nonnegative():
    for (x, y) in [(1, 1), (Fraction(1, 2), 3), (2, Fraction(2, 7))]:
        sub = m_sigma(x, y)
        p = sub.plucker()
        assert orthogonality_residual(p, ALT6).is_zero()
        assert is_totally_nonnegative(p)


def test_m_sigma_matroid_is_ortho_cell():
    p = m_sigma(1, 2).plucker()
    pos = Positroid.from_bases(p.support(), 2, 6)
    assert is_orthopositroid(pos).verdict


def test_m_tau_constraint_enforced():
    with pytest.raises(InputError):
        m_tau(1, 1, 2)
    sub = m_tau(1, 2, 2)
    assert orthogonality_residual(sub.plucker(), ALT6).is_zero()


def test_tau_solution_family():
    for b in (Fraction(1, 2), 1, Fraction(8, 3)):
        for s in (Fraction(1, 9), Fraction(1, 12)):
            a, c = tau_solution(b, s)
            sub = m_tau(a, b, c)
            p = sub.plucker()
            assert orthogonality_residual(p, ALT6).is_zero()
            assert is_totally_nonnegative(p)


def test_edges_isotropic_nonnegative():
    for idx in (1, 2, 3):
        p = edge_e(idx, Fraction(5, 2)).plucker()
        assert orthogonality_residual(p, ALT6).is_zero()
        assert is_totally_nonnegative(p)


def test_printed_edge_fails():
    p = printed_e1(Fraction(3, 4)).plucker()
    assert p.get((3, 5)) == -Fraction(3, 4)
    assert not is_totally_nonnegative(p)


def test_sampled_positive_points_have_ortho_matroids():
    # the matroid of any nonnegative isotropic point passes the pair test
    pts = [m_sigma(1, 1), m_sigma(Fraction(1, 3), 5), m_tau(1, 2, 2),
           edge_e(1, 2), edge_e(2, Fraction(1, 2)), edge_e(3, 3)]
    a, c = tau_solution(Fraction(3, 2), Fraction(1, 9))
    pts.append(m_tau(a, Fraction(3, 2), c))
    for sub in pts:
        p = sub.plucker()
        assert orthogonality_residual(p, ALT6).is_zero()
        assert is_totally_nonnegative(p)
        assert is_orthopositroid(p.support(), 2, 6).verdict


def test_gluing_check_report():
    rep = gluing_check()
    assert rep["ok"], rep
    assert rep["cw_certificate"]
    assert rep["printed_e1_fails_nonnegativity"]
