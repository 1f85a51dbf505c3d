"""Eigenphase metrics and pseudo-metrics on U(n).

For a symmetric norm ``g`` the distance between unitaries ``X`` and ``Y``
is ``g(|a_1|, ..., |a_n|)`` where ``e^{i a_j}`` are the eigenvalues of
``X Y*`` with ``a_j`` in ``(-pi, pi]``. The pseudo-metric additionally
minimizes over a global phase ``e^{ir}`` applied to ``X``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DimensionMismatch
from .linalg import _square, eig_unitary
from .norms import SymmetricNormSpec, evaluate, evaluate_rows

__all__ = [
    "PhaseMinimum",
    "wrap_phase",
    "eigenphases",
    "abs_phases",
    "metric",
    "metric_from_phases",
    "pseudo_metric",
    "minimize_phase_offset",
    "pseudo_metric_grid_oracle",
    "grid_minimize_phase_offset",
    "cost",
]

TWO_PI = 2.0 * math.pi
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class PhaseMinimum:
    """Minimizer of ``F(r) = g(|wrap(a + r)|)`` over ``r`` in ``[0, 2 pi)``."""

    r_star: float
    value: float
    segment_count: int
    evaluations: int


def wrap_phase(x):
    """Map angles to the principal interval (-pi, pi]."""
    x = np.asarray(x, dtype=float)
    return x - TWO_PI * np.ceil((x - math.pi) / TWO_PI)


def eigenphases(u, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Principal eigenvalue arguments of a unitary, sorted descending.

    Arguments within ``tol.branch`` of ``-pi`` are reported as ``+pi``.
    """
    values = eig_unitary(u, tol).values
    phases = np.angle(values)
    phases[phases <= -math.pi + tol.branch] = math.pi
    return np.sort(phases)[::-1]


def abs_phases(u, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Absolute eigenphases, sorted descending (values in [0, pi])."""
    return np.sort(np.abs(eigenphases(u, tol)))[::-1]


def _relative_phases(spec: SymmetricNormSpec, x, y, tol: Tolerances) -> np.ndarray:
    x = _square(x)
    y = _square(y)
    if x.shape != y.shape:
        raise DimensionMismatch(f"unitaries have different shapes {x.shape} and {y.shape}")
    if spec.n != x.shape[0]:
        raise DimensionMismatch(f"norm has dimension {spec.n} but matrices are {x.shape[0]}x{x.shape[0]}")
    return eigenphases(x @ y.conj().T, tol)


def metric_from_phases(spec: SymmetricNormSpec, phases) -> float:
    return evaluate(spec, np.abs(phases))


def metric(spec: SymmetricNormSpec, x, y, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Induced metric ``g(|eigenphases(X Y*)|)``."""
    return metric_from_phases(spec, _relative_phases(spec, x, y, tol))


def _objective(spec: SymmetricNormSpec, phases: np.ndarray, r: np.ndarray) -> np.ndarray:
    x = phases[None, :] + r[:, None]
    return evaluate_rows(spec, x - TWO_PI * np.ceil((x - math.pi) / TWO_PI))


def _golden_section_rows(f, lo: np.ndarray, hi: np.ndarray, tol: float):
    """Golden-section search run in lockstep on many brackets.

    ``f`` maps an array of abscissae to an array of values. Each bracket
    must hold a convex (or unimodal) function. Returns the best abscissae,
    their values and the number of calls to ``f`` per bracket.
    """
    lo = lo.copy()
    hi = hi.copy()
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc = f(c)
    fd = f(d)
    # every bracket shrinks by the same factor per step
    width = float(np.max(hi - lo))
    steps = max(0, math.ceil(math.log(tol / width) / math.log(_INV_PHI))) if width > tol else 0
    for _ in range(steps):
        left = fc < fd
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
        x = np.where(left, hi - _INV_PHI * (hi - lo), lo + _INV_PHI * (hi - lo))
        fx = f(x)
        c, d = np.where(left, x, d), np.where(left, c, x)
        fc, fd = np.where(left, fx, fd), np.where(left, fc, fx)
    calls = 2 + steps
    take_c = fc <= fd
    return np.where(take_c, c, d), np.where(take_c, fc, fd), calls


def minimize_phase_offset(spec: SymmetricNormSpec, phases, r_tol: float = 1e-12) -> PhaseMinimum:
    """Global minimum of ``F(r) = g(|wrap(a_j + r)|)`` over one period.

    ``F`` is only non-smooth where some ``a_j + r`` crosses the branch
    cut, i.e. at ``r = pi - a_j (mod 2 pi)``. Between two consecutive cuts
    every ``|wrap(a_j + r)|`` is convex in ``r`` and ``g`` is monotone on the
    nonnegative orthant, so ``F`` is convex there. Each segment is searched
    by golden section and the cut points themselves are evaluated too.
    """
    a = np.asarray(phases, dtype=float)
    cuts = np.unique(np.mod(math.pi - a, TWO_PI))
    lo = cuts
    hi = np.append(cuts[1:], cuts[0] + TWO_PI)
    f = lambda r: _objective(spec, a, r)  # noqa: E731
    seg_r, seg_val, calls = _golden_section_rows(f, lo, hi, r_tol)
    cut_val = f(cuts)
    r_all = np.concatenate([seg_r, cuts])
    v_all = np.concatenate([seg_val, cut_val])
    best = int(np.argmin(v_all))
    return PhaseMinimum(
        r_star=float(np.mod(r_all[best], TWO_PI)),
        value=float(v_all[best]),
        segment_count=int(cuts.size),
        evaluations=int(cuts.size * (calls + 1)),
    )


def pseudo_metric(spec: SymmetricNormSpec, x, y, tol: Tolerances = DEFAULT_TOLERANCES) -> PhaseMinimum:
    """Pseudo-metric ``min_r g(|eigenphases(e^{ir} X Y*)|)``."""
    return minimize_phase_offset(spec, _relative_phases(spec, x, y, tol))


def _golden_scalar(f, lo: float, hi: float, tol: float) -> tuple[float, float, int]:
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    calls = 2
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
        calls += 1
    return (c, fc, calls) if fc <= fd else (d, fd, calls)


def grid_minimize_phase_offset(
    spec: SymmetricNormSpec,
    phases,
    grid_points: int = 100_000,
    refine_tol: float = 1e-13,
    max_candidates: int = 16,
) -> PhaseMinimum:
    """Brute-force counterpart of :func:`minimize_phase_offset`.

    Samples ``F`` on a uniform grid over ``[0, 2 pi)``, then refines the most
    promising discrete local minima by golden section on each neighbouring
    grid cell. Knows nothing about where the branch cuts sit.
    """
    if grid_points < 3:
        raise ValueError("grid_points must be >= 3")
    a = np.asarray(phases, dtype=float)
    h = TWO_PI / grid_points
    grid = np.arange(grid_points) * h
    vals = np.concatenate(
        [_objective(spec, a, grid[i : i + 8192]) for i in range(0, grid_points, 8192)]
    )
    evaluations = grid_points
    prev = np.roll(vals, 1)
    nxt = np.roll(vals, -1)
    # |F(r) - F(s)| <= g(1,...,1) |r - s|, so minima farther above the best
    # grid value than one cell's worth of slope cannot win
    lipschitz = evaluate(spec, np.ones(a.size))
    cand = np.flatnonzero((vals <= prev) & (vals <= nxt) & (vals <= vals.min() + lipschitz * h))
    cand = cand[np.argsort(vals[cand], kind="stable")][:max_candidates]
    best_r = float(grid[int(np.argmin(vals))])
    best_v = float(vals.min())

    def f(r):
        return float(_objective(spec, a, np.array([r]))[0])

    for i in cand:
        for lo, hi in ((grid[i] - h, grid[i]), (grid[i], grid[i] + h)):
            r, v, calls = _golden_scalar(f, lo, hi, refine_tol)
            evaluations += calls
            if v < best_v:
                best_r, best_v = r, v
    return PhaseMinimum(
        r_star=float(np.mod(best_r, TWO_PI)),
        value=best_v,
        segment_count=int(cand.size),
        evaluations=evaluations,
    )


def pseudo_metric_grid_oracle(
    spec: SymmetricNormSpec, x, y, grid_points: int = 100_000, tol: Tolerances = DEFAULT_TOLERANCES
) -> PhaseMinimum:
    """Grid-search verifier for :func:`pseudo_metric`; meant for tests."""
    return grid_minimize_phase_offset(spec, _relative_phases(spec, x, y, tol), grid_points)


def cost(spec: SymmetricNormSpec, x, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Evolution cost ``f(X) = pseudo_metric(X, I)``."""
    x = _square(x)
    return pseudo_metric(spec, x, np.eye(x.shape[0]), tol).value
