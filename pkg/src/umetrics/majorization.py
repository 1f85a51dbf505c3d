"""Weak sub-majorization, Schur-convexity refutation and Lidskii index sets.

Index sequences are 1-based at every public boundary, matching the usual
matrix-analysis notation ``lambda_1 >= ... >= lambda_n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidIndexSet
from .reports import ValidationReport

__all__ = [
    "MajorizationReport",
    "IndexTriple",
    "GeneralIndexSets",
    "weakly_submajorized",
    "submajorized_pair",
    "check_schur_convex",
    "lidskii_lhs_rhs",
    "enumerate_triples",
    "count_triples",
]


@dataclass(frozen=True)
class MajorizationReport:
    """Result of a prefix-sum comparison.

    ``margin`` is ``min_k (sum_{j<=k} v_j - sum_{j<=k} u_j)``;
    ``violating_k`` is the first 1-based ``k`` where the margin drops below
    ``-tol`` (``None`` when the relation holds).
    """

    holds: bool
    margin: float
    violating_k: int | None

    def __bool__(self):
        return self.holds


def weakly_submajorized(u, v, tol: float = 1e-10) -> MajorizationReport:
    """Is ``u`` weakly sub-majorized by ``v``?

    Both vectors are sorted descending internally, so callers may pass them
    in any order.
    """
    u = np.sort(np.asarray(u, dtype=float).ravel())[::-1]
    v = np.sort(np.asarray(v, dtype=float).ravel())[::-1]
    if u.shape != v.shape:
        raise DimensionMismatch(f"length mismatch: {u.size} vs {v.size}")
    gaps = np.cumsum(v) - np.cumsum(u)
    bad = np.flatnonzero(gaps < -tol)
    return MajorizationReport(
        holds=bad.size == 0,
        margin=float(gaps.min()),
        violating_k=int(bad[0]) + 1 if bad.size else None,
    )


def submajorized_pair(
    n: int, rng: np.random.Generator, upper: float = np.pi, nonnegative: bool = True
) -> tuple[np.ndarray, np.ndarray]:
    """Random ``(u, u')`` with ``u`` weakly sub-majorized by ``u'``.

    ``u'`` is drawn sorted descending. ``u`` starts as a copy, receives a
    few Robin Hood transfers (mass moved from a larger to a smaller entry,
    never reversing their order) and then an entrywise decrease. Each step
    preserves the relation. About one pair in eight is left untouched so
    that the equality boundary is exercised.
    """
    lo = 0.0 if nonnegative else -upper
    top = np.sort(rng.uniform(lo, upper, size=n))[::-1]
    u = top.copy()
    if rng.random() < 0.125:
        return u, top
    for _ in range(rng.integers(0, 2 * n + 1)):
        i, j = sorted(rng.choice(n, size=2, replace=False)) if n > 1 else (0, 0)
        if i == j:
            continue
        hi_, lo_ = (i, j) if u[i] >= u[j] else (j, i)
        t = rng.uniform(0.0, 0.5) * (u[hi_] - u[lo_])
        u[hi_] -= t
        u[lo_] += t
    if rng.random() < 0.75:
        shrink = rng.uniform(0.0, 1.0, size=n) * (rng.random(n) < 0.5)
        u = u - shrink * (u - lo)
    u = np.sort(u)[::-1]
    if not weakly_submajorized(u, top, tol=1e-12):
        raise RuntimeError("submajorized_pair produced an invalid pair")
    return u, top


def check_schur_convex(
    h: Callable[[np.ndarray], float],
    n: int,
    trials: int,
    rng: np.random.Generator,
    tol: float = 1e-10,
    upper: float = np.pi,
    nonnegative: bool = True,
) -> ValidationReport:
    """Randomized refutation of isotonicity under weak sub-majorization.

    Reports every generated pair where ``h(u) > h(u') + tol``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = ValidationReport(name=getattr(h, "__name__", "h"), trials=trials)
    for _ in range(trials):
        u, top = submajorized_pair(n, rng, upper=upper, nonnegative=nonnegative)
        hu, ht = h(u), h(top)
        if hu > ht + tol:
            report.add("isotonicity", u=u, u_prime=top, h_u=hu, h_u_prime=ht)
    return report


def _strictly_increasing(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


@dataclass(frozen=True)
class IndexTriple:
    """Index sequences ``j_1 < ... < j_p`` and ``k_1 < ... < k_p`` (1-based).

    The paired output index is ``j_l + k_l - l``; the triple is admissible
    for dimension ``n`` when ``j_p + k_p - p <= n``.
    """

    j: tuple[int, ...]
    k: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "j", tuple(int(x) for x in self.j))
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        if not self.j or len(self.j) != len(self.k):
            raise InvalidIndexSet(f"j and k must be nonempty and equally long: {self.j}, {self.k}")
        if min(self.j + self.k) < 1:
            raise InvalidIndexSet("indices are 1-based")
        if not (_strictly_increasing(self.j) and _strictly_increasing(self.k)):
            raise InvalidIndexSet(f"j and k must be strictly increasing: {self.j}, {self.k}")

    @property
    def p(self) -> int:
        return len(self.j)

    @property
    def output_indices(self) -> tuple[int, ...]:
        return tuple(a + b - l for l, (a, b) in enumerate(zip(self.j, self.k), start=1))

    def admissible(self, n: int) -> bool:
        return self.j[-1] <= n and self.k[-1] <= n and self.j[-1] + self.k[-1] - self.p <= n

    def to_json(self) -> dict:
        return {"j": list(self.j), "k": list(self.k)}

    @classmethod
    def from_json(cls, obj: dict) -> "IndexTriple":
        try:
            return cls(obj["j"], obj["k"])
        except (KeyError, TypeError) as exc:
            raise InvalidIndexSet('index triple JSON needs "j" and "k" lists') from exc

    def __str__(self):
        return f"j={','.join(map(str, self.j))};k={','.join(map(str, self.k))}"


@dataclass(frozen=True)
class GeneralIndexSets:
    """Equal-size subsets ``I, J, K`` of ``{1, ..., n}`` (1-based)."""

    I: tuple[int, ...]  # noqa: E741
    J: tuple[int, ...]
    K: tuple[int, ...]

    def __post_init__(self):
        for name in ("I", "J", "K"):
            vals = tuple(sorted(int(x) for x in getattr(self, name)))
            if len(set(vals)) != len(vals):
                raise InvalidIndexSet(f"{name} has repeated indices: {vals}")
            if vals and vals[0] < 1:
                raise InvalidIndexSet(f"{name} must be 1-based: {vals}")
            object.__setattr__(self, name, vals)
        if not self.I or not (len(self.I) == len(self.J) == len(self.K)):
            raise InvalidIndexSet("I, J, K must be nonempty with equal cardinality")

    def check_dimension(self, n: int) -> None:
        top = max(self.I + self.J + self.K)
        if top > n:
            raise InvalidIndexSet(f"index {top} out of range for n = {n}")

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J), "K": list(self.K)}

    @classmethod
    def from_json(cls, obj: dict) -> "GeneralIndexSets":
        try:
            return cls(obj["I"], obj["J"], obj["K"])
        except (KeyError, TypeError) as exc:
            raise InvalidIndexSet('index sets JSON needs "I", "J" and "K" lists') from exc


def lidskii_lhs_rhs(triple: IndexTriple, c, a, b) -> tuple[float, float]:
    """Both sides of ``sum_l c[j_l + k_l - l] <= sum_l (a[j_l] + b[k_l])``.

    ``a``, ``b``, ``c`` are expected sorted descending; indexing is 1-based.
    """
    c, a, b = (np.asarray(x, dtype=float).ravel() for x in (c, a, b))
    n = c.size
    if a.size != n or b.size != n:
        raise DimensionMismatch(f"vectors must share a length, got {c.size}, {a.size}, {b.size}")
    if not triple.admissible(n):
        raise InvalidIndexSet(f"triple {triple} is not admissible for n = {n}")
    lhs = rhs = 0.0
    for jj, kk, oo in zip(triple.j, triple.k, triple.output_indices):
        lhs += c[oo - 1]
        rhs += a[jj - 1] + b[kk - 1]
    return float(lhs), float(rhs)


def enumerate_triples(n: int, p: int) -> Iterator[IndexTriple]:
    """All admissible triples of length ``p``, lexicographic in ``(j, k)``."""
    if not 1 <= p <= n:
        raise ValueError(f"p must lie in [1, {n}], got {p}")
    subsets = list(itertools.combinations(range(1, n + 1), p))
    for j in subsets:
        for k in subsets:
            if j[-1] + k[-1] - p <= n:
                yield IndexTriple(j, k)


def count_triples(n: int, p: int) -> int:
    return sum(1 for _ in enumerate_triples(n, p))
