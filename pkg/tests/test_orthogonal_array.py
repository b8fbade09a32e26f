import itertools
from collections import Counter

import numpy as np
import pytest

from weighcodes.errors import ShapeMismatch
from weighcodes.finite_field import field_new
from weighcodes.orthogonal_array import (
    OrthogonalArray,
    oa_build,
    oa_verify,
    projective_points,
    substitute,
)
from weighcodes.ternary_matrix import TernaryMatrix, jacobsthal

from conftest import brute_distance_set


def _projective_oracle(q, m):
    """Normalise every nonzero vector by its first nonzero entry and dedupe."""
    f = field_new(q)
    reps = set()
    for v in itertools.product(range(q), repeat=m + 1):
        if not any(v):
            continue
        lead = next(f(c) for c in v if c)
        scale = lead.inverse()
        reps.add(tuple((f(c) * scale).index for c in v))
    return sorted(reps)


@pytest.mark.parametrize("q, m, count", [(3, 1, 4), (3, 2, 13), (5, 1, 6), (9, 1, 10), (9, 2, 91)])
def test_projective_points(q, m, count):
    pts = projective_points(field_new(q), m)
    assert len(pts) == count
    assert pts == _projective_oracle(q, m)


def test_projective_points_q3_m1():
    assert projective_points(field_new(3), 1) == [(0, 1), (1, 0), (1, 1), (1, 2)]


def _brute_agreements(grid):
    grid = grid.tolist()
    return Counter(
        sum(a == b for a, b in zip(grid[i], grid[j]))
        for i in range(len(grid))
        for j in range(i + 1, len(grid))
    )


@pytest.mark.parametrize("q, m", [(3, 1), (3, 2), (5, 1), (7, 1), (9, 1), (5, 2), (7, 2), (9, 2)])
def test_agreement_count(q, m):
    o = oa_build(field_new(q), m)
    assert o.grid.shape == (q ** (m + 1), (q ** (m + 1) - 1) // (q - 1))
    report = oa_verify(o)
    expected = (q**m - 1) // (q - 1)
    n = q ** (m + 1)
    assert report.agreement_histogram == {expected: n * (n - 1) // 2}
    assert report.passed


@pytest.mark.parametrize("q, m", [(3, 1), (3, 2), (5, 1)])
def test_agreement_count_brute(q, m):
    o = oa_build(field_new(q), m)
    assert set(_brute_agreements(o.grid)) == {(q**m - 1) // (q - 1)}


@pytest.mark.parametrize("q, m", [(3, 1), (5, 1)])
def test_strength_two_brute(q, m):
    o = oa_build(field_new(q), m)
    for c1, c2 in itertools.permutations(range(o.n_cols), 2):
        counts = Counter(zip(o.grid[:, c1].tolist(), o.grid[:, c2].tolist()))
        assert len(counts) == q * q
        assert set(counts.values()) == {q ** (m - 1)}


def test_golden_oa_passes(golden):
    o = golden("oa_3_1.oa")
    assert (o.q, o.m, o.n_rows, o.n_cols) == (3, 1, 9, 4)
    report = oa_verify(o)
    assert report.passed
    assert report.agreement_histogram == {1: 36}


def test_corrupted_oa_fails(golden):
    o = golden("oa_3_1.oa")
    grid = o.grid.copy()
    grid[4, 2] = (grid[4, 2] + 1) % 3
    report = oa_verify(OrthogonalArray(3, 1, grid))
    assert not report.passed
    assert report.offending_pairs
    assert all(4 in pair[:2] for pair in report.offending_pairs)
    assert not report.strength2_ok and not report.balance_ok


def test_substitute_example():
    d = substitute(oa_build(field_new(3), 1), jacobsthal(3))
    assert d.shape == (9, 12)
    assert set(d.row_weights().tolist()) == {8}
    assert brute_distance_set(d.array) == {9}
    g = d.array.astype(int) @ d.array.T.astype(int)
    assert np.array_equal(g, 9 * np.eye(9, dtype=int) - 1)


def test_substitute_on_golden_oa_gives_golden_matrix(golden):
    assert substitute(golden("oa_3_1.oa"), jacobsthal(3)) == golden("substituted_9x12.grid")


def test_substitute_single_column_is_identity_map():
    o = OrthogonalArray(3, 0, np.arange(3).reshape(3, 1))
    assert substitute(o, jacobsthal(3)) == jacobsthal(3)


def test_substitute_depth_two():
    d = substitute(oa_build(field_new(3), 2), jacobsthal(3))
    assert d.shape == (27, 39)
    assert set(d.row_weights().tolist()) == {26}
    assert min(brute_distance_set(d.array)) == 27


def test_substitute_shape_check():
    with pytest.raises(ShapeMismatch):
        substitute(oa_build(field_new(3), 1), jacobsthal(5))


@pytest.mark.parametrize("q, m", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (9, 1), (9, 2)])
def test_substitution_gram_and_distance_laws(q, m):
    d = substitute(oa_build(field_new(q), m), jacobsthal(q)).array.astype(int)
    lam = (q**m - 1) // (q - 1)
    k = (q ** (m + 1) - 1) // (q - 1)
    off = ~np.eye(len(d), dtype=bool)
    assert set((d @ d.T)[off].tolist()) == {lam * (q - 1) - (k - lam)} == {-1}
    agree = np.zeros((len(d), len(d)), dtype=int)
    for s in (-1, 0, 1):
        ind = (d == s).astype(int)
        agree += ind @ ind.T
    dist = d.shape[1] - agree
    assert set(dist[off].tolist()) == {(k - lam) * (q + 3) // 2} == {q**m * (q + 3) // 2}


def test_oa_rejects_bad_symbols():
    with pytest.raises(ValueError):
        OrthogonalArray(3, 1, np.array([[0, 3]]))


def test_permute_rows_keeps_property():
    o = oa_build(field_new(5), 1)
    shuffled = o.permute_rows(np.random.default_rng(3).permutation(o.n_rows))
    assert oa_verify(shuffled).passed
    assert shuffled != o
