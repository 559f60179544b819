import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import framelab as fl

BLOCK4 = fl.Frame("R", np.array([[1, 0, -1, 0], [0, 1, 0, -1]], dtype=float))


def test_commutant_partition_block_matrix():
    M = np.zeros((5, 5))
    M[:2, :2] = [[1, 0.5], [0.5, 1]]
    M[2:, 2:] = [[1, 0.2, 0.0], [0.2, 1, 0.3], [0.0, 0.3, 1]]
    p = fl.commutant_partition(M)
    assert p.blocks == ((1, 2), (3, 4, 5))


def test_commutant_partition_simplex_is_trivial():
    p = fl.commutant_partition(fl.gram(fl.simplex_frame(4)).entries)
    assert p.trivial


def test_commutant_partition_two_bases():
    p = fl.commutant_partition(fl.gram(BLOCK4).entries)
    assert p.blocks == ((1, 3), (2, 4))


def test_commutant_partition_permutation_invariance():
    rng = np.random.default_rng(2)
    M = fl.gram(BLOCK4).entries
    perm = rng.permutation(4)
    A = fl.permutation_matrix(perm)
    p1 = fl.commutant_partition(M)
    p2 = fl.commutant_partition(A.T @ M @ A)
    # blocks relabel through the permutation
    inv = np.argsort(perm)
    relabeled = sorted(tuple(sorted(int(inv[i - 1]) + 1 for i in b)) for b in p1.blocks)
    assert sorted(p2.blocks) == relabeled


def test_is_orthodecomposable():
    dec, p = fl.is_orthodecomposable(BLOCK4)
    assert dec and p.blocks == ((1, 3), (2, 4))
    dec, p = fl.is_orthodecomposable(fl.simplex_frame(3))
    assert not dec and p.trivial
    dec, p = fl.is_orthodecomposable(fl.harmonic_frame(4, 2, "R"))
    assert dec and p.blocks == ((1, 3), (2, 4))


def test_check_block_cardinalities():
    assert fl.check_block_cardinalities(fl.Partition(4, ((1, 3), (2, 4))), 4, 2)
    assert not fl.check_block_cardinalities(fl.Partition(5, ((1, 2), (3, 4, 5))), 5, 2)
    assert fl.check_block_cardinalities(fl.Partition(6, ((1, 2, 3), (4, 5, 6))), 6, 4)


def test_block_cardinalities_hold_for_frames():
    for (k, n, field, seed) in [(4, 2, "R", 0), (6, 3, "C", 1), (6, 4, "R", 2)]:
        F = fl.random_tight_frame(k, n, field, np.random.default_rng(seed))
        _, p = fl.is_orthodecomposable(F)
        assert fl.check_block_cardinalities(p, k, n)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_tangent_report_simplex(n):
    rep = fl.tangent_report(fl.gram(fl.simplex_frame(n)))
    assert rep.rank == n and rep.regular
    assert rep.stratum_dim == 0


def test_tangent_report_generic_5_2():
    F = fl.random_tight_frame(5, 2, "R", np.random.default_rng(4), spread=0.05)
    rep = fl.tangent_report(fl.gram(F))
    assert rep.rank == 4 and rep.regular and rep.stratum_dim == 2
    assert rep.ambient_dim == 2 * 3


def test_tangent_report_two_bases():
    rep = fl.tangent_report(fl.gram(BLOCK4))
    assert not rep.regular
    assert rep.rank == 2
    assert rep.stratum_dim == 0


def test_block_count_equals_corank():
    cases = [fl.gram(BLOCK4), fl.gram(fl.simplex_frame(3)),
             fl.gram(fl.harmonic_frame(6, 2, "R")),
             fl.construct_regular_point(6, 3)]
    for R in cases:
        rep = fl.tangent_report(R)
        sigma = fl.commutant_partition(R.entries)
        assert len(sigma) == R.k - rep.rank


def test_expected_dimensions_values():
    d = fl.expected_dimensions(5, 2, "R")
    assert d == {"dimG": 2, "dimF": 3, "dimN": 2, "dimM": 3}
    for n in (2, 3, 6):
        assert fl.expected_dimensions(n + 1, n, "R")["dimG"] == 0
    d = fl.expected_dimensions(3, 2, "C")
    assert d["dimG"] == 2 and d["dimF"] == 6


def test_expected_dimensions_cross_checked_by_tangent_rank():
    # ambient tangent rank k-1 pins dimG = ambient_dim - (k-1)
    for (k, n, field, seed) in [(5, 2, "R", 0), (5, 3, "C", 1), (7, 4, "R", 2)]:
        F = fl.random_tight_frame(k, n, field, np.random.default_rng(seed), spread=0.04)
        rep = fl.tangent_report(fl.gram(F))
        assert rep.regular
        assert rep.ambient_dim - rep.rank == fl.expected_dimensions(k, n, field)["dimG"]


def test_construct_regular_point_4_2():
    S = fl.construct_regular_point(4, 2)
    assert fl.is_gram_point(S.entries, 2).ok
    assert fl.commutant_partition(S.entries).trivial
    assert fl.tangent_report(S).regular


def test_construct_regular_point_6_3():
    S = fl.construct_regular_point(6, 3)
    assert fl.is_gram_point(S.entries, 3).ok
    assert fl.commutant_partition(S.entries).trivial
    assert fl.tangent_report(S).regular


def test_construct_regular_point_coprime():
    S = fl.construct_regular_point(5, 2)
    assert fl.is_gram_point(S.entries, 2).ok
    assert fl.tangent_report(S).regular


@pytest.mark.parametrize("k,n", [(4, 2), (6, 3), (6, 2), (8, 4), (9, 6), (10, 4)])
def test_construct_regular_point_general(k, n):
    S = fl.construct_regular_point(k, n)
    assert fl.is_gram_point(S.entries, n).ok
    assert fl.commutant_partition(S.entries).trivial


def test_harmonic_frame_mercedes():
    F = fl.harmonic_frame(3, 2, "R")
    G = F.entries.T @ F.entries
    assert_allclose(G, fl.gram(fl.simplex_frame(2)).entries, atol=1e-12)
    angles = np.angle(F.entries[0] + 1j * F.entries[1])
    assert_allclose(np.sort(np.mod(angles, 2 * np.pi)),
                    [0, 2 * np.pi / 3, 4 * np.pi / 3], atol=1e-12)


def test_harmonic_frame_4_2_pattern():
    F = fl.harmonic_frame(4, 2, "R")
    assert_allclose(np.abs(F.entries), np.array([[1, 0, 1, 0], [0, 1, 0, 1]]),
                    atol=1e-12)
    dec, _ = fl.is_orthodecomposable(F)
    assert dec


@pytest.mark.parametrize("field", ["R", "C"])
@pytest.mark.parametrize("k,n", [(5, 2), (7, 3), (6, 5), (9, 4)])
def test_harmonic_frame_tight_unit(k, n, field):
    F = fl.harmonic_frame(k, n, field)
    assert fl.is_spherical(F, 1e-10)
    tight, bound = fl.is_tight(F, 1e-10)
    assert tight and abs(bound - k / n) < 1e-10


def test_coprime_points_all_regular():
    # with gcd(k, n) = 1, every valid Gram point is a regular point
    for seed in range(20):
        k, n = (5, 3)
        F = fl.random_tight_frame(k, n, "R", np.random.default_rng(seed), spread=0.05)
        assert fl.tangent_report(fl.gram(F)).regular


def test_tangent_rank_permutation_invariant():
    rng = np.random.default_rng(6)
    R = fl.gram(fl.random_tight_frame(6, 2, "R", rng, spread=0.03))
    rep = fl.tangent_report(R)
    for _ in range(3):
        perm = rng.permutation(6)
        A = fl.permutation_matrix(perm)
        Rp = fl.GramPoint("R", 2, A.T @ R.entries @ A)
        assert fl.tangent_report(Rp).rank == rep.rank


def test_stratum_dim_matches_expected_at_regular_points():
    for (k, n, field, seed) in [(5, 2, "R", 0), (7, 3, "C", 1)]:
        F = fl.random_tight_frame(k, n, field, np.random.default_rng(seed), spread=0.04)
        rep = fl.tangent_report(fl.gram(F))
        assert rep.stratum_dim == fl.expected_dimensions(k, n, field)["dimG"]


def test_partition_validation():
    with pytest.raises(ValueError):
        fl.Partition(4, ((1, 2), (2, 3, 4)))
    with pytest.raises(ValueError):
        fl.Partition(4, ((1, 2),))
    p = fl.Partition(4, ((4, 2), (3, 1)))
    assert p.blocks == ((1, 3), (2, 4))
