"""Acceptance criteria, each at its stated tolerance and trial count.

Run alone with ``pytest tests/test_acceptance.py -v -s``; one PASS/FAIL line
per criterion is printed and repeated in the terminal summary.
"""

import json

import numpy as np
import pytest

from umetrics import inequalities as ineq
from umetrics.cli import main
from umetrics.errors import PremiseViolation
from umetrics.linalg import haar_unitary, track_residuals
from umetrics.majorization import GeneralIndexSets
from umetrics.metrics import pseudo_metric, pseudo_metric_grid_oracle
from umetrics.norms import SymmetricNormSpec, parse_norm, validate_symmetric_norm

pytestmark = pytest.mark.acceptance

DIMS = (2, 3, 4, 5, 6)
NORMS = ("l1", "l2", "linf", "kyfan:2", "mu:random-positive")
SEED = 20240601


@pytest.fixture(scope="module")
def residual_log():
    with track_residuals() as log:
        yield log


@pytest.fixture(autouse=True)
def _track(residual_log):
    return residual_log


def norm_for(text, n):
    return parse_norm(text, n, np.random.default_rng([SEED, n]))


def summarize(reports):
    bad = [r for r in reports if not r.ok]
    worst = min(r.worst_margin for r in reports)
    return not bad, f"{len(reports)} runs, {sum(r.violations for r in reports)} violations, worst margin {worst:.3e}"


def test_criterion_01_metric_axioms(record_criterion):
    reports = [
        ineq.check_metric_axioms(norm_for(text, n), n, 1000, SEED, tol=1e-8)
        for n in DIMS
        for text in NORMS
    ]
    ok, detail = summarize(reports)
    assert record_criterion(1, "metric axioms", ok, detail)


def test_criterion_02_pseudo_metric_axioms(record_criterion):
    reports = [
        ineq.check_pseudo_metric_axioms(norm_for(text, n), n, 500, SEED, tol=1e-6)
        for n in DIMS
        for text in NORMS
    ]
    ok, detail = summarize(reports)
    assert record_criterion(2, "pseudo-metric axioms", ok, detail)


def _random_norm(rng, n):
    choice = rng.integers(0, 6)
    if choice == 0:
        return SymmetricNormSpec.lp(n, 1)
    if choice == 1:
        return SymmetricNormSpec.lp(n, 2)
    if choice == 2:
        return parse_norm("linf", n)
    if choice == 3:
        return SymmetricNormSpec.lp(n, float(rng.uniform(1.0, 6.0)))
    if choice == 4:
        return SymmetricNormSpec.kyfan(n, int(rng.integers(1, n + 1)))
    return SymmetricNormSpec.mu_weighted(rng.uniform(0.0, 1.0, size=n) + 1e-3)


def test_criterion_03_solver_matches_grid_oracle(record_criterion):
    rng = np.random.default_rng([SEED, 3])
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(1, 7))
        spec = _random_norm(rng, n)
        x, y = haar_unitary(n, rng), haar_unitary(n, rng)
        solved = pseudo_metric(spec, x, y).value
        oracle = pseudo_metric_grid_oracle(spec, x, y, grid_points=100_000).value
        worst = max(worst, abs(solved - oracle))
    analytic = 0.0
    for theta in (0.1, 1.0, 3.0):
        x = np.diag([1.0, np.exp(1j * theta)])
        analytic = max(
            analytic,
            abs(pseudo_metric(parse_norm("l1", 2), x, np.eye(2)).value - theta),
            abs(pseudo_metric(parse_norm("linf", 2), x, np.eye(2)).value - theta / 2),
        )
    ok = worst <= 1e-6 and analytic <= 1e-6
    detail = f"max |solver - oracle| {worst:.2e} over 500, analytic error {analytic:.2e}"
    assert record_criterion(3, "solver vs grid oracle", ok, detail)


def test_criterion_04_kyfan_chain(record_criterion, capsys):
    code = main(["check", "kyfan-chain", "--dims", "2,3,4,5,6", "--trials", "1000", "--seed", str(SEED)])
    reports = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    ok = code == 0 and len(reports) == 5 and all(r["violations"] == 0 and r["tol"] == 1e-9 for r in reports)
    worst = min(r["worst_margin"] for r in reports)
    assert record_criterion(4, "Ky Fan chain", ok, f"exit {code}, worst margin {worst:.3e}")


def test_criterion_05_unitary_lidskii(record_criterion):
    reports = [ineq.check_unitary_lidskii(n, None, 1000, SEED, tol=1e-9) for n in DIMS]
    ok, detail = summarize(reports)
    assert record_criterion(5, "unitary Lidskii, all p", ok, detail)


def test_criterion_06_hermitian_lidskii_and_trace(record_criterion):
    reports = [ineq.check_hermitian_lidskii(n, None, 1000, SEED, tol=1e-9) for n in DIMS]
    ok, detail = summarize(reports)
    # the margin folds in the trace identity with slack 1e-9 * n; check it
    # directly on the worst case as well
    trace_gap = 0.0
    for r in reports:
        case = ineq._decode_case(r.to_dict()["worst_case"])
        a, b = case["A"], case["B"]
        lam = np.linalg.eigvalsh
        gap = abs(lam(a + b).sum() - lam(a).sum() - lam(b).sum())
        trace_gap = max(trace_gap, gap / (1e-9 * r.n))
    ok = ok and trace_gap <= 1.0
    assert record_criterion(6, "Hermitian Lidskii + trace", ok, f"{detail}, trace gap / (1e-9 n) {trace_gap:.2e}")


def test_criterion_07_schur_transfer(record_criterion):
    reports = []
    failures = []
    for n in DIMS:
        for h in ineq.builtin_transfer_functionals(n):
            try:
                reports.append(ineq.check_schur_transfer(h, n, 500, SEED, isotonicity_trials=1000))
            except PremiseViolation as exc:
                failures.append(f"n={n} {h}: {exc}")
    ok, detail = summarize(reports)
    ok = ok and not failures
    assert record_criterion(7, "Schur transfer", ok, f"{detail}; premise failures {len(failures)}")


def test_criterion_08_perturbation(record_criterion):
    reports = [
        ineq.check_perturbation(n, eps, 1000, SEED, tol=1e-9) for n in DIMS for eps in (0.01, 0.1, 0.5)
    ]
    ok, detail = summarize(reports)
    assert record_criterion(8, "perturbation bound", ok, detail)


def test_criterion_09_cost_constraints(record_criterion):
    reports = [
        ineq.check_cost_constraints(norm_for(text, n), n, 500, SEED, tol=1e-8)
        for n in DIMS
        for text in NORMS
    ]
    ok, detail = summarize(reports)
    assert record_criterion(9, "cost constraints", ok, detail)


def test_criterion_10_negative_controls(record_criterion, capsys):
    code = main(["check", "general-lidskii", "--sets", '{"I":[2],"J":[2],"K":[2]}', "--dims", "2", "--trials", "100"])
    report = json.loads(capsys.readouterr().out)
    direct = ineq.check_general_lidskii(GeneralIndexSets([2], [2], [2]), 2, 100, SEED)

    def signed_sum(v):
        return float(np.sum(v))

    broken = validate_symmetric_norm(signed_sum, np.random.default_rng(SEED), trials=1000, n=3)
    ok = code == 1 and report["violations"] >= 1 and direct.violations >= 1 and not broken.ok
    detail = f"exit {code}, {report['violations']} violations; broken norm flagged {broken.counts()}"
    assert record_criterion(10, "negative controls", ok, detail)


def test_criterion_11_numerical_substrate(record_criterion, capsys, residual_log):
    outputs = []
    for _ in range(2):
        code = main(["check", "all", "--seed", "42"])
        outputs.append(capsys.readouterr().out)
    identical = outputs[0] == outputs[1] and code == 0

    rng = np.random.default_rng([SEED, 11])
    moment = np.mean([abs(np.trace(haar_unitary(2, rng))) ** 2 for _ in range(10_000)])

    ok = residual_log.worst_ratio <= 1e-10 and abs(moment - 1.0) <= 0.05 and identical
    detail = (
        f"worst residual/(n||M||_F) {residual_log.worst_ratio:.2e} over {residual_log.decompositions} "
        f"decompositions, E|tr U|^2 = {moment:.4f}, check all byte-identical: {identical}"
    )
    assert record_criterion(11, "numerical substrate", ok, detail)
