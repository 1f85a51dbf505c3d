"""Randomized checkers for the eigenphase and eigenvalue inequalities.

Every suite is a pair of functions: a sampler that turns a per-trial random
stream into a *case* (a dict of matrices and parameters) and a margin
function that maps a case to its worst slack. The runner reduces margins
over trials; because a case carries everything the margin depends on, the
worst case stored in a :class:`~umetrics.reports.TrialReport` can be
replayed exactly with :func:`replay`.

Per-trial streams are derived from ``(seed, n, trial, suite)`` so results
do not depend on thread count or execution order.
"""

from __future__ import annotations

import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import InvalidIndexSet, PremiseViolation
from .linalg import (
    eig_hermitian,
    exp_i_hermitian,
    gue_hermitian,
    haar_unitary,
    matrix_from_json,
)
from .majorization import (
    GeneralIndexSets,
    IndexTriple,
    check_schur_convex,
    enumerate_triples,
)
from .metrics import (
    abs_phases,
    cost,
    eigenphases,
    grid_minimize_phase_offset,
    metric,
    minimize_phase_offset,
    pseudo_metric,
)
from .norms import SymmetricNormSpec, evaluate, ky_fan_vector, parse_norm
from .reports import TrialReport

__all__ = [
    "TransferFunctional",
    "builtin_transfer_functionals",
    "trial_rng",
    "trial_margin",
    "replay",
    "check_kyfan_chain",
    "check_metric_axioms",
    "check_pseudo_metric_axioms",
    "check_cost_constraints",
    "check_unitary_lidskii",
    "check_hermitian_lidskii",
    "check_schur_transfer",
    "check_general_lidskii",
    "check_perturbation",
    "DEFAULT_SUITE_TOL",
]

DEFAULT_SUITE_TOL = {
    "metric-axioms": 1e-8,
    "pseudo-metric-axioms": 1e-6,
    "cost-constraints": 1e-8,
    "kyfan-chain": 1e-9,
    "unitary-lidskii": 1e-9,
    "hermitian-lidskii": 1e-9,
    "schur-transfer": 1e-9,
    "general-lidskii": 1e-9,
    "perturbation": 1e-9,
}

# trace equality in the Hermitian suite is held to this times n
TRACE_TOL_PER_DIM = 1e-9


def trial_rng(seed: int, n: int, trial: int, suite: str) -> np.random.Generator:
    salt = zlib.crc32(suite.encode())
    return np.random.default_rng(np.random.SeedSequence([seed, n, trial, salt]))


def _dim(case: dict) -> int:
    for v in case.values():
        if isinstance(v, np.ndarray) and v.ndim == 2:
            return v.shape[0]
    raise ValueError("case holds no matrix")


def _spec(case: dict) -> SymmetricNormSpec:
    return parse_norm(case["norm"], _dim(case))


def _phase(r: float, m: np.ndarray) -> np.ndarray:
    return np.exp(1j * r) * m


# -- Ky Fan chain --------------------------------------------------------------


def _sample_kyfan_chain(rng, n):
    return {"X": haar_unitary(n, rng), "Y": haar_unitary(n, rng), "Z": haar_unitary(n, rng)}


def _margin_kyfan_chain(case, tol=DEFAULT_TOLERANCES):
    x, y, z = case["X"], case["Y"], case["Z"]
    a = eigenphases(x @ y.conj().T, tol)
    b = eigenphases(y @ z.conj().T, tol)
    c = eigenphases(x @ z.conj().T, tol)
    paired = np.sort(np.abs(a))[::-1] + np.sort(np.abs(b))[::-1]
    abs_c = np.abs(c)
    return min(ky_fan_vector(paired, k) - ky_fan_vector(abs_c, k) for k in range(1, c.size + 1))


# -- metric and pseudo-metric axioms ---------------------------------------


def _sample_metric_axioms(rng, n, spec):
    return {
        "norm": str(spec),
        "X": haar_unitary(n, rng),
        "Y": haar_unitary(n, rng),
        "Z": haar_unitary(n, rng),
        "W": haar_unitary(n, rng),
    }


def _margin_metric_axioms(case, tol=DEFAULT_TOLERANCES):
    spec = _spec(case)
    x, y, z, w = case["X"], case["Y"], case["Z"], case["W"]
    n = x.shape[0]
    dxy = metric(spec, x, y, tol)
    dyx = metric(spec, y, x, tol)
    dyz = metric(spec, y, z, tol)
    dxz = metric(spec, x, z, tol)
    dw = metric(spec, w @ x, w @ y, tol)
    # g(v) >= g(e_1) max|v_j| and ||X - Y||_F <= ||a||_2 <= sqrt(n) max|a_j|,
    # so a positive Frobenius gap forces a positive distance
    e1 = np.zeros(n)
    e1[0] = 1.0
    floor = evaluate(spec, e1) * np.linalg.norm(x - y, "fro") / math.sqrt(n)
    return min(
        dxy,
        dxy + dyz - dxz,
        -abs(dxy - dyx),
        dxy - floor,
        -abs(dw - dxy),
    )


def _sample_pseudo_metric_axioms(rng, n, spec, oracle_points):
    case = _sample_metric_axioms(rng, n, spec)
    del case["W"]
    case["r"] = float(rng.uniform(0.0, 2.0 * math.pi))
    case["oracle_points"] = int(oracle_points)
    return case


def _margin_pseudo_metric_axioms(case, tol=DEFAULT_TOLERANCES):
    spec = _spec(case)
    x, y, z, r = case["X"], case["Y"], case["Z"], case["r"]
    pm = lambda u, v: pseudo_metric(spec, u, v, tol).value  # noqa: E731
    pxy, pyx, pyz, pxz = pm(x, y), pm(y, x), pm(y, z), pm(x, z)
    parts = [
        pxy,
        pxy + pyz - pxz,
        -abs(pxy - pyx),
        -abs(pm(_phase(r, x), y) - pxy),
        metric(spec, x, y, tol) - pxy,
    ]
    if case.get("oracle_points"):
        phases = eigenphases(x @ y.conj().T, tol)
        oracle = grid_minimize_phase_offset(spec, phases, case["oracle_points"]).value
        parts.append(-abs(minimize_phase_offset(spec, phases).value - oracle))
    return min(parts)


def _sample_cost_constraints(rng, n, spec):
    return {
        "norm": str(spec),
        "X": haar_unitary(n, rng),
        "Y": haar_unitary(n, rng),
        "W": haar_unitary(n, rng),
        "r": float(rng.uniform(0.0, 2.0 * math.pi)),
    }


def _margin_cost_constraints(case, tol=DEFAULT_TOLERANCES):
    spec = _spec(case)
    x, y, w, r = case["X"], case["Y"], case["W"], case["r"]
    f = lambda u: cost(spec, u, tol)  # noqa: E731
    fx = f(x)
    return min(
        -abs(f(np.eye(x.shape[0]))),
        -abs(f(_phase(r, x)) - fx),
        -abs(f(x.conj().T) - fx),
        -abs(f(w @ x @ w.conj().T) - fx),
        fx + f(y) - f(x @ y),
    )


# -- Lidskii-type inequalities -----------------------------------------------


@lru_cache(maxsize=None)
def _lidskii_tables(n: int, p: int | None):
    """Selection matrices so that ``Sc @ c`` and ``Sa @ a + Sb @ b`` give both
    sides of every admissible triple at once."""
    ps = range(1, n + 1) if p is None else (p,)
    triples = [t for q in ps for t in enumerate_triples(n, q)]
    sc = np.zeros((len(triples), n))
    sa = np.zeros((len(triples), n))
    sb = np.zeros((len(triples), n))
    for row, t in enumerate(triples):
        for jj, kk, oo in zip(t.j, t.k, t.output_indices):
            sc[row, oo - 1] += 1
            sa[row, jj - 1] += 1
            sb[row, kk - 1] += 1
    return triples, sc, sa, sb


def lidskii_margins(c, a, b, p: int | None = None) -> np.ndarray:
    """``rhs - lhs`` for every admissible triple (all lengths when ``p`` is None)."""
    c, a, b = (np.asarray(v, dtype=float) for v in (c, a, b))
    _, sc, sa, sb = _lidskii_tables(c.size, p)
    return sa @ a + sb @ b - sc @ c


def _sample_unitary_lidskii(rng, n, p):
    return {"X": haar_unitary(n, rng), "Y": haar_unitary(n, rng), "p": p}


def _margin_unitary_lidskii(case, tol=DEFAULT_TOLERANCES):
    x, y = case["X"], case["Y"]
    a, b, c = abs_phases(x, tol), abs_phases(y, tol), abs_phases(x @ y, tol)
    return float(lidskii_margins(c, a, b, case["p"]).min())


def _sample_hermitian_lidskii(rng, n, p, suite_tol):
    return {"A": gue_hermitian(n, 1.0, rng), "B": gue_hermitian(n, 1.0, rng), "p": p, "tol": suite_tol}


def _margin_hermitian_lidskii(case, tol=DEFAULT_TOLERANCES):
    suite_tol = case.get("tol", DEFAULT_SUITE_TOL["hermitian-lidskii"])
    a_m, b_m = case["A"], case["B"]
    la = eig_hermitian(a_m, tol).values
    lb = eig_hermitian(b_m, tol).values
    lc = eig_hermitian(a_m + b_m, tol).values
    margin = float(lidskii_margins(lc, la, lb, case["p"]).min())
    # trace defect expressed in units of the suite tolerance, so it breaks
    # the -tol threshold exactly when it exceeds TRACE_TOL_PER_DIM * n
    defect = abs(lc.sum() - la.sum() - lb.sum())
    return min(margin, -defect * suite_tol / (TRACE_TOL_PER_DIM * la.size))


def _sample_general_lidskii(rng, n, sets):
    case = {"A": gue_hermitian(n, 1.0, rng), "B": gue_hermitian(n, 1.0, rng)}
    case.update(sets.to_json())
    return case


def _margin_general_lidskii(case, tol=DEFAULT_TOLERANCES):
    sets = GeneralIndexSets(case["I"], case["J"], case["K"])
    la = eig_hermitian(case["A"], tol).values
    lb = eig_hermitian(case["B"], tol).values
    lc = eig_hermitian(case["A"] + case["B"], tol).values
    idx = lambda s: np.array(s) - 1  # noqa: E731
    return float(la[idx(sets.I)].sum() + lb[idx(sets.J)].sum() - lc[idx(sets.K)].sum())


# -- perturbation ------------------------------------------------------------


def _hermitian_with_spectrum(values, rng):
    v = haar_unitary(values.size, rng)
    h = (v * values) @ v.conj().T
    return 0.5 * (h + h.conj().T)


def _sample_perturbation(rng, n, eps):
    a_vals = rng.uniform(-math.pi + eps, math.pi - eps, size=n)
    b_vals = rng.uniform(-eps, eps, size=n)
    return {
        "A": _hermitian_with_spectrum(a_vals, rng),
        "B": _hermitian_with_spectrum(b_vals, rng),
        "eps": float(eps),
    }


def _margin_perturbation(case, tol=DEFAULT_TOLERANCES):
    x = exp_i_hermitian(case["A"], tol)
    e = exp_i_hermitian(case["B"], tol)
    a = eigenphases(x, tol)
    c = eigenphases(x @ e, tol)
    return case["eps"] - float(np.max(np.abs(c - a)))


# -- Schur-convex transfer -----------------------------------------------------


@dataclass(frozen=True)
class TransferFunctional:
    """A functional ``h(c, a, b)`` whose sign encodes an inequality ``h <= 0``.

    ``kind="kyfan"``: ``ky_fan(c, k) - ky_fan(a, k) - ky_fan(b, k)``.
    ``kind="lidskii"``: ``sum_l c[j_l+k_l-l] - sum_l (a[j_l] + b[k_l])``.
    """

    kind: str
    k: int | None = None
    triple: IndexTriple | None = None

    def __post_init__(self):
        if self.kind == "kyfan" and (self.k is None or self.k < 1):
            raise ValueError("kyfan functional needs k >= 1")
        if self.kind == "lidskii" and self.triple is None:
            raise ValueError("lidskii functional needs an IndexTriple")
        if self.kind not in ("kyfan", "lidskii"):
            raise ValueError(f"unknown transfer functional kind {self.kind!r}")

    def __call__(self, c, a, b) -> float:
        if self.kind == "kyfan":
            return ky_fan_vector(c, self.k) - ky_fan_vector(a, self.k) - ky_fan_vector(b, self.k)
        c, a, b = (np.asarray(v, dtype=float) for v in (c, a, b))
        j = np.array(self.triple.j) - 1
        k = np.array(self.triple.k) - 1
        out = np.array(self.triple.output_indices) - 1
        return float(c[out].sum() - a[j].sum() - b[k].sum())

    def __str__(self):
        return f"kyfan:{self.k}" if self.kind == "kyfan" else f"lidskii:{self.triple}"

    @classmethod
    def parse(cls, text: str) -> "TransferFunctional":
        kind, _, body = text.partition(":")
        if kind == "kyfan":
            return cls("kyfan", k=int(body))
        if kind == "lidskii":
            parts = dict(piece.split("=") for piece in body.split(";"))
            j = [int(v) for v in parts["j"].split(",")]
            k = [int(v) for v in parts["k"].split(",")]
            return cls("lidskii", triple=IndexTriple(j, k))
        raise ValueError(f"unknown transfer functional {text!r}")


def builtin_transfer_functionals(n: int) -> list[TransferFunctional]:
    """Ky Fan forms for ``k = 1..n`` and the prefix Lidskii forms ``j = k = (1..p)``.

    Lidskii forms picking a non-prefix set of output positions are left out:
    they are not isotone under weak sub-majorization (``(1, 1)`` is
    sub-majorized by ``(2, 0)`` yet has the larger second entry).
    """
    out = [TransferFunctional("kyfan", k=k) for k in range(1, n + 1)]
    out += [
        TransferFunctional("lidskii", triple=IndexTriple(range(1, p + 1), range(1, p + 1)))
        for p in range(1, n + 1)
    ]
    return out


def _singular_values(h, tol):
    return np.sort(np.abs(eig_hermitian(h, tol).values))[::-1]


def _sample_schur_base(rng, n, functional):
    return {"A": gue_hermitian(n, 1.0, rng), "B": gue_hermitian(n, 1.0, rng), "functional": str(functional)}


def _margin_schur_base(case, tol=DEFAULT_TOLERANCES):
    h = TransferFunctional.parse(case["functional"])
    a_m, b_m = case["A"], case["B"]
    return -h(_singular_values(a_m + b_m, tol), _singular_values(a_m, tol), _singular_values(b_m, tol))


def _sample_schur_transfer(rng, n, functional):
    return {"X": haar_unitary(n, rng), "Y": haar_unitary(n, rng), "functional": str(functional)}


def _margin_schur_transfer(case, tol=DEFAULT_TOLERANCES):
    h = TransferFunctional.parse(case["functional"])
    x, y = case["X"], case["Y"]
    return -h(abs_phases(x @ y, tol), abs_phases(x, tol), abs_phases(y, tol))


# -- runner --------------------------------------------------------------------

_MARGINS: dict[str, Callable] = {
    "kyfan-chain": _margin_kyfan_chain,
    "metric-axioms": _margin_metric_axioms,
    "pseudo-metric-axioms": _margin_pseudo_metric_axioms,
    "cost-constraints": _margin_cost_constraints,
    "unitary-lidskii": _margin_unitary_lidskii,
    "hermitian-lidskii": _margin_hermitian_lidskii,
    "general-lidskii": _margin_general_lidskii,
    "perturbation": _margin_perturbation,
    "schur-transfer": _margin_schur_transfer,
    "schur-transfer-base": _margin_schur_base,
}


def trial_margin(suite: str, case: dict, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Worst slack of a single case; the same path every suite runs per trial."""
    try:
        fn = _MARGINS[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}") from None
    return float(fn(case, tol))


def _decode_case(obj: dict) -> dict:
    out = {}
    for key, val in obj.items():
        if isinstance(val, dict) and "rows" in val:
            out[key] = matrix_from_json(val)
        else:
            out[key] = val
    return out


def replay(report) -> float:
    """Recompute the worst margin of a report (or its ``to_dict()`` form)."""
    d = report.to_dict() if isinstance(report, TrialReport) else report
    return trial_margin(d["suite"], _decode_case(d["worst_case"]))


def _run(
    suite: str,
    n: int,
    trials: int,
    seed: int,
    tol: float,
    sampler: Callable[[np.random.Generator], dict],
    norm: str | None = None,
    params: dict | None = None,
    threads: int = 1,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> TrialReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    margin_fn = _MARGINS[suite]

    def one(t: int):
        case = sampler(trial_rng(seed, n, t, suite))
        return float(margin_fn(case, tolerances)), case

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(one, range(trials))
            return _reduce(suite, n, trials, seed, tol, norm, params, results)
    return _reduce(suite, n, trials, seed, tol, norm, params, map(one, range(trials)))


def _reduce(suite, n, trials, seed, tol, norm, params, results) -> TrialReport:
    violations = 0
    worst = math.inf
    worst_trial = -1
    worst_case: dict = {}
    for t, (m, case) in enumerate(results):
        if m < -tol:
            violations += 1
        if m < worst:  # strict: ties keep the lowest trial index
            worst, worst_trial, worst_case = m, t, case
    return TrialReport(
        suite=suite,
        n=n,
        trials=trials,
        violations=violations,
        worst_margin=worst,
        worst_trial=worst_trial,
        worst_case=worst_case,
        seed=seed,
        tol=tol,
        norm=norm,
        params=params or {},
    )


def _tol(suite, tol):
    return DEFAULT_SUITE_TOL[suite] if tol is None else tol


def check_kyfan_chain(n: int, trials: int, seed: int, tol: float | None = None, threads: int = 1) -> TrialReport:
    """Ky Fan sub-majorization of ``|c|`` by ``sort|a| + sort|b|`` for Haar triples."""
    return _run(
        "kyfan-chain", n, trials, seed, _tol("kyfan-chain", tol),
        lambda rng: _sample_kyfan_chain(rng, n), threads=threads,
    )


def check_metric_axioms(
    spec: SymmetricNormSpec, n: int, trials: int, seed: int, tol: float | None = None, threads: int = 1
) -> TrialReport:
    """Nonnegativity, symmetry, triangle inequality, left invariance and a
    quantitative identity-of-indiscernibles bound for the induced metric."""
    _check_spec_dim(spec, n)
    return _run(
        "metric-axioms", n, trials, seed, _tol("metric-axioms", tol),
        lambda rng: _sample_metric_axioms(rng, n, spec), norm=str(spec), threads=threads,
    )


def check_pseudo_metric_axioms(
    spec: SymmetricNormSpec,
    n: int,
    trials: int,
    seed: int,
    tol: float | None = None,
    oracle_points: int = 2048,
    threads: int = 1,
) -> TrialReport:
    """Pseudo-metric axioms, global phase invariance, ``d_pseudo <= d`` and,
    when ``oracle_points > 0``, agreement with the grid oracle."""
    _check_spec_dim(spec, n)
    return _run(
        "pseudo-metric-axioms", n, trials, seed, _tol("pseudo-metric-axioms", tol),
        lambda rng: _sample_pseudo_metric_axioms(rng, n, spec, oracle_points),
        norm=str(spec), params={"oracle_points": oracle_points}, threads=threads,
    )


def check_cost_constraints(
    spec: SymmetricNormSpec, n: int, trials: int, seed: int, tol: float | None = None, threads: int = 1
) -> TrialReport:
    """``f(I) = 0``, phase invariance, ``f(X*) = f(X)``, conjugation invariance
    and sub-additivity for ``f(X) = pseudo_metric(X, I)``."""
    _check_spec_dim(spec, n)
    return _run(
        "cost-constraints", n, trials, seed, _tol("cost-constraints", tol),
        lambda rng: _sample_cost_constraints(rng, n, spec), norm=str(spec), threads=threads,
    )


def check_unitary_lidskii(
    n: int, p: int | None, trials: int, seed: int, tol: float | None = None, threads: int = 1
) -> TrialReport:
    """Lidskii inequalities on absolute eigenphases of ``X``, ``Y``, ``XY``.

    ``p=None`` checks every admissible triple of every length.
    """
    if p is not None and not 1 <= p <= n:
        raise ValueError(f"p must lie in [1, {n}]")
    return _run(
        "unitary-lidskii", n, trials, seed, _tol("unitary-lidskii", tol),
        lambda rng: _sample_unitary_lidskii(rng, n, p), params={"p": p}, threads=threads,
    )


def check_hermitian_lidskii(
    n: int, p: int | None, trials: int, seed: int, tol: float | None = None, threads: int = 1
) -> TrialReport:
    """Lidskii inequalities plus the trace identity for GUE pairs."""
    if p is not None and not 1 <= p <= n:
        raise ValueError(f"p must lie in [1, {n}]")
    suite_tol = _tol("hermitian-lidskii", tol)
    return _run(
        "hermitian-lidskii", n, trials, seed, suite_tol,
        lambda rng: _sample_hermitian_lidskii(rng, n, p, suite_tol), params={"p": p}, threads=threads,
    )


def check_general_lidskii(
    sets: GeneralIndexSets, n: int, trials: int, seed: int, tol: float | None = None, threads: int = 1
) -> TrialReport:
    """Empirical check of ``sum_K l(A+B) <= sum_I l(A) + sum_J l(B)``.

    Whether the sets form a valid inequality is not verified; violations
    are a legitimate outcome.
    """
    if not isinstance(sets, GeneralIndexSets):
        raise InvalidIndexSet("sets must be a GeneralIndexSets")
    sets.check_dimension(n)
    return _run(
        "general-lidskii", n, trials, seed, _tol("general-lidskii", tol),
        lambda rng: _sample_general_lidskii(rng, n, sets), params={"sets": sets.to_json()}, threads=threads,
    )


def check_perturbation(
    n: int, eps: float, trials: int, seed: int, tol: float | None = None, threads: int = 1
) -> TrialReport:
    """``|c_j - a_j| <= eps`` for ``X = exp(iA)`` perturbed by ``exp(iB)``."""
    if not 0 < eps < math.pi / 4:
        raise ValueError("eps must lie in (0, pi/4)")
    return _run(
        "perturbation", n, trials, seed, _tol("perturbation", tol),
        lambda rng: _sample_perturbation(rng, n, eps), params={"eps": eps}, threads=threads,
    )


def check_schur_transfer(
    functional: TransferFunctional,
    n: int,
    trials: int,
    seed: int,
    tol: float | None = None,
    isotonicity_trials: int = 1000,
    threads: int = 1,
) -> TrialReport:
    """Transfer a Hermitian singular-value inequality to absolute eigenphases.

    Three stages: the functional must be isotone in its first argument
    (refutation search at a fixed sampled ``(a, b)``), the Hermitian base
    inequality must hold on GUE pairs, and then the unitary inequality is
    checked on Haar pairs. Failure of either premise raises
    :class:`PremiseViolation`; the returned report covers the last stage.
    """
    suite_tol = _tol("schur-transfer", tol)
    if functional.kind == "kyfan" and functional.k > n:
        raise ValueError(f"kyfan:{functional.k} needs n >= {functional.k}")
    if functional.kind == "lidskii" and not functional.triple.admissible(n):
        raise InvalidIndexSet(f"triple {functional.triple} is not admissible for n = {n}")

    rng = trial_rng(seed, n, 0, "schur-transfer-isotonicity")
    a = abs_phases(haar_unitary(n, rng))
    b = abs_phases(haar_unitary(n, rng))
    iso = check_schur_convex(lambda c: functional(c, a, b), n, isotonicity_trials, rng, tol=suite_tol)
    if not iso.ok:
        raise PremiseViolation(f"{functional} is not isotone under weak sub-majorization", iso)

    base = _run(
        "schur-transfer-base", n, trials, seed, suite_tol,
        lambda r: _sample_schur_base(r, n, functional), params={"functional": str(functional)},
        threads=threads,
    )
    if not base.ok:
        raise PremiseViolation(f"Hermitian base inequality for {functional} fails", base)

    report = _run(
        "schur-transfer", n, trials, seed, suite_tol,
        lambda r: _sample_schur_transfer(r, n, functional),
        params={
            "functional": str(functional),
            "isotonicity_trials": isotonicity_trials,
            "base_worst_margin": base.worst_margin,
        },
        threads=threads,
    )
    return report


def _check_spec_dim(spec: SymmetricNormSpec, n: int) -> None:
    if spec.n != n:
        raise ValueError(f"norm {spec} has dimension {spec.n}, suite dimension is {n}")
