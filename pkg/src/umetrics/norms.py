"""Symmetric norms on R^n.

Three families are built in: ``l_p`` norms (``p`` in ``[1, inf]``), vector
Ky Fan ``k``-norms (sum of the ``k`` largest absolute entries), and
weighted ``mu``-norms ``max_sigma sum_j |mu_j v_sigma(j)|``.

Norm descriptions round-trip through short strings::

    l1  l2  linf  lp:2.5  kyfan:3  mu:1,0.5,0.25
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DimensionMismatch, InvalidNormSpec
from .linalg import as_matrix, eig_hermitian, hermiticity_defect
from .reports import ValidationReport

__all__ = [
    "INF",
    "SymmetricNormSpec",
    "parse_norm",
    "evaluate",
    "evaluate_rows",
    "ky_fan_vector",
    "ky_fan_matrix",
    "validate_symmetric_norm",
]


class _Infinity(enum.Enum):
    INF = "inf"

    def __repr__(self):
        return "INF"


INF = _Infinity.INF
"""Marker for ``p = infinity`` in an ``lp`` spec."""

LP, KYFAN, MU = "lp", "kyfan", "mu"


@dataclass(frozen=True)
class SymmetricNormSpec:
    """Declarative description of a symmetric norm on R^n.

    Build with :meth:`lp`, :meth:`kyfan`, :meth:`mu` or :func:`parse_norm`
    rather than the raw constructor.
    """

    kind: str
    n: int
    p: Union[float, _Infinity, None] = None
    k: int | None = None
    mu: tuple[float, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidNormSpec(f"dimension must be a positive integer, got {self.n!r}")
        if self.kind == LP:
            if self.p is INF:
                return
            if not isinstance(self.p, (int, float)) or not math.isfinite(self.p) or self.p < 1:
                raise InvalidNormSpec(f"lp norm needs p >= 1 (or INF), got {self.p!r}")
        elif self.kind == KYFAN:
            if not isinstance(self.k, (int, np.integer)) or not 1 <= self.k <= self.n:
                raise InvalidNormSpec(f"kyfan:k needs 1 <= k <= n = {self.n}, got {self.k!r}")
        elif self.kind == MU:
            if self.mu is None or len(self.mu) != self.n:
                raise InvalidNormSpec(f"mu-norm needs {self.n} weights, got {self.mu!r}")
            if not all(math.isfinite(w) for w in self.mu):
                raise InvalidNormSpec("mu weights must be finite")
            if not any(w != 0 for w in self.mu):
                raise InvalidNormSpec("mu weights are all zero: that is a seminorm, not a norm")
        else:
            raise InvalidNormSpec(f"unknown norm kind {self.kind!r}")

    @classmethod
    def lp(cls, n: int, p) -> "SymmetricNormSpec":
        if p == math.inf or p == "inf":
            p = INF
        elif p is not INF:
            p = float(p)
        return cls(LP, n, p=p)

    @classmethod
    def kyfan(cls, n: int, k: int) -> "SymmetricNormSpec":
        return cls(KYFAN, n, k=k)

    @classmethod
    def mu_weighted(cls, mu) -> "SymmetricNormSpec":
        weights = tuple(float(w) for w in mu)
        return cls(MU, len(weights), mu=weights)

    def __str__(self):
        if self.kind == LP:
            if self.p is INF:
                return "linf"
            if self.p in (1.0, 2.0):
                return f"l{int(self.p)}"
            return f"lp:{self.p!r}"
        if self.kind == KYFAN:
            return f"kyfan:{self.k}"
        return "mu:" + ",".join(repr(w) for w in self.mu)

    def __call__(self, v) -> float:
        return evaluate(self, v)


def parse_norm(text: str, n: int, rng: np.random.Generator | None = None) -> SymmetricNormSpec:
    """Parse a norm string for dimension ``n``.

    ``mu:random`` draws ``n`` weights uniformly from ``[0.1, 1]``; it needs
    ``rng``.
    """
    s = text.strip().lower()
    if s in ("l1", "l2"):
        return SymmetricNormSpec.lp(n, int(s[1]))
    if s in ("linf", "lp:inf"):
        return SymmetricNormSpec.lp(n, INF)
    head, sep, body = s.partition(":")
    if not sep or not body:
        raise InvalidNormSpec(f"cannot parse norm {text!r}")
    try:
        if head == "lp":
            return SymmetricNormSpec.lp(n, float(body))
        if head == "kyfan":
            return SymmetricNormSpec.kyfan(n, int(body))
        if head == "mu":
            if body in ("random", "random-positive"):
                if rng is None:
                    raise InvalidNormSpec("mu:random needs a random generator")
                return SymmetricNormSpec.mu_weighted(rng.uniform(0.1, 1.0, size=n))
            spec = SymmetricNormSpec.mu_weighted(float(w) for w in body.split(","))
            if spec.n != n:
                raise InvalidNormSpec(f"mu-norm has {spec.n} weights but dimension is {n}")
            return spec
    except ValueError as exc:
        if isinstance(exc, InvalidNormSpec):
            raise
        raise InvalidNormSpec(f"cannot parse norm {text!r}: {exc}") from exc
    raise InvalidNormSpec(f"unknown norm {text!r}")


def evaluate_rows(spec: SymmetricNormSpec, rows: np.ndarray) -> np.ndarray:
    """Evaluate ``spec`` on every row of a 2-D real array."""
    a = np.abs(np.asarray(rows, dtype=float))
    if a.ndim != 2 or a.shape[1] != spec.n:
        raise DimensionMismatch(f"expected rows of length {spec.n}, got shape {a.shape}")
    if spec.kind == LP:
        p = spec.p
        if p is INF:
            return a.max(axis=1)
        if p == 1.0:
            return a.sum(axis=1)
        if p == 2.0:
            return np.sqrt(np.einsum("ij,ij->i", a, a))
        # rescale by the max entry so large p cannot overflow
        top = a.max(axis=1)
        safe = np.where(top > 0, top, 1.0)
        return top * np.sum((a / safe[:, None]) ** p, axis=1) ** (1.0 / p)
    if spec.kind == KYFAN:
        if spec.k == spec.n:
            return a.sum(axis=1)
        return -np.sort(-a, axis=1)[:, : spec.k].sum(axis=1)
    # rearrangement inequality: the max over permutations pairs sorted with sorted
    weights = np.sort(np.abs(spec.mu))[::-1]
    return -np.sort(-a, axis=1) @ weights


def evaluate(spec: SymmetricNormSpec, v) -> float:
    vec = np.asarray(v, dtype=float)
    if vec.ndim != 1 or vec.shape[0] != spec.n:
        raise DimensionMismatch(f"norm of dimension {spec.n} applied to vector of shape {vec.shape}")
    if not np.all(np.isfinite(vec)):
        raise ValueError("vector has non-finite entries")
    return float(evaluate_rows(spec, vec[None, :])[0])


def ky_fan_vector(v, k: int) -> float:
    """Sum of the ``k`` largest entries of ``v``, signs kept."""
    vec = np.asarray(v, dtype=float).ravel()
    if not 1 <= k <= vec.size:
        raise ValueError(f"k must lie in [1, {vec.size}], got {k}")
    return float(np.sort(vec)[::-1][:k].sum())


def ky_fan_matrix(m, k: int, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Ky Fan ``k``-norm: the sum of the ``k`` largest singular values."""
    m = as_matrix(m)
    if not 1 <= k <= min(m.shape):
        raise ValueError(f"k must lie in [1, {min(m.shape)}], got {k}")
    if m.shape[0] == m.shape[1] and hermiticity_defect(m) <= tol.hermiticity:
        sv = np.abs(eig_hermitian(m, tol).values)
    else:
        gram = m.conj().T @ m
        gram = 0.5 * (gram + gram.conj().T)
        sv = np.sqrt(np.clip(eig_hermitian(gram, tol).values, 0.0, None))
    return float(np.sort(sv)[::-1][:k].sum())


def validate_symmetric_norm(
    norm: SymmetricNormSpec | Callable[[np.ndarray], float],
    rng: np.random.Generator,
    trials: int = 1000,
    n: int | None = None,
    slack: float = 1e-10,
) -> ValidationReport:
    """Randomized self-test of the symmetric norm axioms.

    Checks the triangle inequality, absolute homogeneity, invariance under
    permutations and sign flips, and positivity on nonzero vectors. Every
    failing input is recorded in the report; nothing is raised.

    ``norm`` may be a spec or any callable on 1-D arrays (then ``n`` is
    required). Slack is relative: ``slack * (1 + magnitude)``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if isinstance(norm, SymmetricNormSpec):
        n = norm.n
        g = norm.__call__
        name = str(norm)
    else:
        if n is None:
            raise ValueError("n is required when norm is a plain callable")
        g = norm
        name = getattr(norm, "__name__", repr(norm))
    report = ValidationReport(name=name, trials=trials)
    for _ in range(trials):
        scale = 10.0 ** rng.uniform(-3, 3)
        u = rng.standard_normal(n) * scale
        v = rng.standard_normal(n) * scale
        alpha = rng.uniform(-5, 5)
        perm = rng.permutation(n)
        signs = rng.choice([-1.0, 1.0], size=n)
        gu, gv = g(u), g(v)
        tol = slack * (1.0 + abs(gu) + abs(gv))
        if g(u + v) > gu + gv + tol:
            report.add("triangle", u=u, v=v)
        if abs(g(alpha * u) - abs(alpha) * gu) > slack * (1.0 + abs(alpha) * abs(gu)):
            report.add("homogeneity", u=u, alpha=alpha)
        if abs(g(u[perm]) - gu) > tol:
            report.add("permutation", u=u, perm=perm)
        if abs(g(u * signs) - gu) > tol:
            report.add("sign_flip", u=u, signs=signs)
        if not gu > 0:
            report.add("positivity", u=u)
    return report
