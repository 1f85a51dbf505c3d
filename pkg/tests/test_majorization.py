import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umetrics.errors import DimensionMismatch, InvalidIndexSet
from umetrics.majorization import (
    GeneralIndexSets,
    IndexTriple,
    check_schur_convex,
    count_triples,
    enumerate_triples,
    lidskii_lhs_rhs,
    submajorized_pair,
    weakly_submajorized,
)
from umetrics.norms import SymmetricNormSpec, evaluate, ky_fan_vector, parse_norm


def test_weak_submajorization_examples():
    rep = weakly_submajorized([1, 2, 3], [1, 2, 3])
    assert rep.holds and rep.margin == 0 and rep.violating_k is None
    assert weakly_submajorized([1, 1], [2, 0])
    rep = weakly_submajorized([3, 0], [2, 1])
    assert not rep.holds and rep.violating_k == 1 and rep.margin == -1


def test_weak_submajorization_sorts_internally():
    assert weakly_submajorized([0, 3], [1, 2]).violating_k == 1
    assert weakly_submajorized([1, 1], [0, 2])


def test_weak_submajorization_length_mismatch():
    with pytest.raises(DimensionMismatch):
        weakly_submajorized([1, 2], [1])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_reflexive_and_transitive(n, seed):
    rng = np.random.default_rng(seed)
    u, v = submajorized_pair(n, rng)
    w = np.sort(v + rng.uniform(0, 1, n))[::-1]
    assert weakly_submajorized(u, u)
    assert weakly_submajorized(v, w)
    assert weakly_submajorized(u, w)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_equivalent_to_ky_fan_prefix_sums(n, seed):
    rng = np.random.default_rng(seed)
    u = np.sort(rng.uniform(0, 3, n))[::-1]
    v = np.sort(rng.uniform(0, 3, n))[::-1]
    by_kyfan = all(ky_fan_vector(u, k) <= ky_fan_vector(v, k) + 1e-10 for k in range(1, n + 1))
    assert bool(weakly_submajorized(u, v)) == by_kyfan


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1), st.booleans())
def test_generated_pairs_are_submajorized(n, seed, nonneg):
    u, top = submajorized_pair(n, np.random.default_rng(seed), nonnegative=nonneg)
    assert weakly_submajorized(u, top, tol=1e-12)
    assert np.all(np.diff(u) <= 0) and np.all(np.diff(top) <= 0)
    if nonneg:
        assert np.all(u >= 0)


def test_generator_hits_the_equality_boundary(rng):
    margins = [weakly_submajorized(*submajorized_pair(4, rng)).margin for _ in range(400)]
    assert sum(m == 0 for m in margins) > 10
    assert sum(m > 0 for m in margins) > 100


def test_schur_convex_prefix_sum(rng):
    for k in (1, 3, 5):
        assert check_schur_convex(lambda u, k=k: float(np.sort(u)[::-1][:k].sum()), 5, 500, rng).ok


@pytest.mark.parametrize("text", ["l1", "l2", "linf", "lp:1.5", "kyfan:1", "kyfan:3", "mu:random"])
def test_schur_convex_builtin_norms(text, rng):
    spec = parse_norm(text, 4, rng)
    assert check_schur_convex(lambda u: evaluate(spec, u), 4, 1000, rng).ok


def test_schur_convex_negative_control(rng):
    report = check_schur_convex(lambda u: -float(np.sum(u)), 4, 300, rng)
    assert not report.ok
    assert report.violations[0]["property"] == "isotonicity"


def test_non_prefix_position_is_not_schur_convex(rng):
    # picking the second-largest entry alone is not isotone: (1,1) vs (2,0)
    report = check_schur_convex(lambda u: float(np.sort(u)[::-1][1]), 2, 500, rng)
    assert not report.ok


def test_lidskii_full_and_top():
    c, a, b = np.array([5.0, 2, 1]), np.array([3.0, 1, 0]), np.array([2.0, 2, -1])
    assert lidskii_lhs_rhs(IndexTriple([1, 2, 3], [1, 2, 3]), c, a, b) == (8.0, 7.0)
    assert lidskii_lhs_rhs(IndexTriple([1], [1]), c, a, b) == (5.0, 5.0)


def test_lidskii_matches_independent_loop(rng):
    n = 6
    for _ in range(20):
        c, a, b = (np.sort(rng.standard_normal(n))[::-1] for _ in range(3))
        p = int(rng.integers(1, n + 1))
        for t in enumerate_triples(n, p):
            lhs = rhs = 0.0
            for ell in range(1, p + 1):
                jj, kk = t.j[ell - 1], t.k[ell - 1]
                lhs += c[jj + kk - ell - 1]
                rhs += a[jj - 1] + b[kk - 1]
            assert lidskii_lhs_rhs(t, c, a, b) == (lhs, rhs)


def test_lidskii_rejects_inadmissible():
    with pytest.raises(InvalidIndexSet):
        lidskii_lhs_rhs(IndexTriple([2], [2]), [1, 0], [1, 0], [1, 0])
    with pytest.raises(DimensionMismatch):
        lidskii_lhs_rhs(IndexTriple([1], [1]), [1, 0], [1], [1, 0])


def test_enumerate_small_cases():
    assert [(t.j, t.k) for t in enumerate_triples(2, 1)] == [((1,), (1,)), ((1,), (2,)), ((2,), (1,))]
    assert [(t.j, t.k) for t in enumerate_triples(3, 3)] == [((1, 2, 3), (1, 2, 3))]


@pytest.mark.parametrize("n,p", [(5, 2), (4, 1), (6, 3), (5, 5)])
def test_enumerate_count_matches_brute_force(n, p):
    expected = 0
    for j in itertools.product(range(1, n + 1), repeat=p):
        for k in itertools.product(range(1, n + 1), repeat=p):
            inc = all(x < y for x, y in zip(j, j[1:])) and all(x < y for x, y in zip(k, k[1:]))
            if inc and j[-1] + k[-1] - p <= n:
                expected += 1
    assert count_triples(n, p) == expected


def test_enumerate_is_duplicate_free_and_valid():
    for n in range(1, 6):
        for p in range(1, n + 1):
            seen = set()
            for t in enumerate_triples(n, p):
                assert (t.j, t.k) not in seen
                seen.add((t.j, t.k))
                assert t.p == p and t.admissible(n)
    with pytest.raises(ValueError):
        list(enumerate_triples(3, 4))


@pytest.mark.parametrize("j,k", [([], []), ([1, 1], [1, 2]), ([2, 1], [1, 2]), ([1], [1, 2]), ([0], [1])])
def test_index_triple_invariants(j, k):
    with pytest.raises(InvalidIndexSet):
        IndexTriple(j, k)


def test_index_json_round_trip():
    t = IndexTriple.from_json({"j": [1, 3], "k": [2, 4]})
    assert t.to_json() == {"j": [1, 3], "k": [2, 4]}
    assert t.output_indices == (2, 5)
    sets = GeneralIndexSets.from_json({"I": [2, 1], "J": [1, 3], "K": [3, 2]})
    assert sets.to_json() == {"I": [1, 2], "J": [1, 3], "K": [2, 3]}
    with pytest.raises(InvalidIndexSet):
        GeneralIndexSets.from_json({"I": [1], "J": [1, 2], "K": [1]})
    with pytest.raises(InvalidIndexSet):
        GeneralIndexSets.from_json({"I": [1, 1], "J": [1, 2], "K": [1, 2]})
    with pytest.raises(InvalidIndexSet):
        sets.check_dimension(2)
