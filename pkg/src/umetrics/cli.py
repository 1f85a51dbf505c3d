"""Command-line interface.

Exit codes: 0 success / no violations, 1 violations found, 2 usage or
numerical error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import zlib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import inequalities as ineq
from .errors import InvalidNormSpec, PremiseViolation, UMetricsError
from .linalg import dump_matrix, gue_hermitian, haar_unitary, load_matrix
from .majorization import GeneralIndexSets
from .metrics import abs_phases, eigenphases, metric, pseudo_metric
from .norms import SymmetricNormSpec, parse_norm

SUITES = (
    "metric-axioms",
    "pseudo-metric-axioms",
    "cost-constraints",
    "kyfan-chain",
    "unitary-lidskii",
    "hermitian-lidskii",
    "schur-transfer",
    "perturbation",
    "general-lidskii",
)
DEFAULT_NORMS = ("l1", "l2", "linf", "kyfan:2", "mu:random")
DEFAULT_SETS = '{"I": [1], "J": [1], "K": [1]}'
MAX_DIM = 64

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    seed: int
    dims: list[int]
    trials: int
    norm_specs: list[str]
    tol_scale: float = 1.0
    tol_overrides: dict[str, float] = field(default_factory=dict)
    output_format: str = "json"
    threads: int = 1

    def __post_init__(self):
        if not self.dims or any(not 1 <= d <= MAX_DIM for d in self.dims):
            raise UsageError(f"--dims must be a nonempty list of integers in [1, {MAX_DIM}]")
        if self.trials < 1:
            raise UsageError("--trials must be >= 1")
        if self.threads < 1:
            raise UsageError("--threads must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise UsageError("--seed must be a 64-bit unsigned integer")
        if self.tol_scale <= 0:
            raise UsageError("--tol must be positive")

    def tol(self, suite: str) -> float:
        if suite in self.tol_overrides:
            return self.tol_overrides[suite]
        return ineq.DEFAULT_SUITE_TOL[suite] * self.tol_scale


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _common_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps subparser defaults from clobbering flags given before
    # the subcommand; real defaults are filled in by _apply_defaults
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, help="master seed (default: $UMETRICS_SEED or 0)")
    p.add_argument("--dims", type=_int_list, help="comma-separated dimensions (default 2,3,4)")
    p.add_argument("--trials", type=int, help="trials per (suite, dimension, norm) (default 100)")
    p.add_argument("--norm", action="append", help="norm spec; repeat for several (l1, l2, linf, lp:P, kyfan:K, mu:W1,W2,..., mu:random)")
    p.add_argument("--format", choices=("json", "csv", "human"), help="output format (default json)")
    p.add_argument("--tol", type=float, help="multiplies every suite tolerance")
    p.add_argument("--threads", type=int, help="worker threads for suite trials (default 1)")
    p.add_argument("--output", type=Path, help="write output here instead of stdout")
    return p


_DEFAULTS = {
    "dims": [2, 3, 4],
    "trials": 100,
    "norm": None,
    "format": "json",
    "tol": 1.0,
    "threads": 1,
    "output": None,
}


def _apply_defaults(args: argparse.Namespace) -> None:
    for key, val in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, val)
    if not hasattr(args, "seed"):
        env = os.environ.get("UMETRICS_SEED")
        try:
            args.seed = int(env) if env else 0
        except ValueError:
            raise UsageError(f"UMETRICS_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="umetrics",
        parents=[common],
        description="Symmetric-norm metrics on U(n) and randomized checks of eigenphase inequalities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("metric", "induced metric d_g(X, Y)"), ("pseudo-metric", "phase-optimized pseudo-metric")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("x", type=Path, help="matrix JSON file")
        p.add_argument("y", type=Path, help="matrix JSON file")

    p = sub.add_parser("eigenphases", parents=[common], help="principal eigenphases of a unitary")
    p.add_argument("x", type=Path)

    p = sub.add_parser("cost", parents=[common], help="evolution cost pseudo_metric(X, I)")
    p.add_argument("x", type=Path)

    p = sub.add_parser("check", parents=[common], help="run randomized inequality suites")
    p.add_argument("suite", help="one of: " + ", ".join(SUITES + ("all",)))
    p.add_argument("--eps", type=_float_list, default=[0.01, 0.1, 0.5], help="perturbation sizes")
    p.add_argument("--p", type=int, default=None, help="Lidskii sequence length (default: all)")
    p.add_argument("--sets", default=DEFAULT_SETS, help="general Lidskii index sets as JSON")
    p.add_argument("--oracle-points", type=int, default=2048, help="grid size of the pseudo-metric cross-check (0 disables)")

    p = sub.add_parser("sample", parents=[common], help="draw random matrices")
    p.add_argument("kind", choices=("haar", "gue"))
    p.add_argument("n", type=int)
    p.add_argument("count", type=int, nargs="?", default=1)
    p.add_argument("--scale", type=float, default=1.0, help="GUE scale")
    return parser


def _split_tol_overrides(argv: list[str]) -> tuple[list[str], dict[str, float]]:
    """Pull ``--tol-<suite> VALUE`` / ``--tol-<suite>=VALUE`` out of argv."""
    rest: list[str] = []
    overrides: dict[str, float] = {}
    it = iter(argv)
    for tok in it:
        if tok.startswith("--tol-"):
            name, eq, val = tok[len("--tol-"):].partition("=")
            if not eq:
                val = next(it, None)
                if val is None:
                    raise UsageError(f"{tok} needs a value")
            if name not in ineq.DEFAULT_SUITE_TOL:
                raise UsageError(f"unknown tolerance {tok}; suites: {', '.join(SUITES)}")
            try:
                overrides[name] = float(val)
            except ValueError:
                raise UsageError(f"{tok} needs a number, got {val!r}") from None
        else:
            rest.append(tok)
    return rest, overrides


def _seeded(seed: int, n: int, tag: str) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, n, zlib.crc32(tag.encode())]))


def _norm_for(text: str, n: int, seed: int) -> SymmetricNormSpec:
    return parse_norm(text, n, rng=_seeded(seed, n, "mu:random"))


def _emit(text: str, args) -> None:
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text, encoding="utf-8")


def _single_norm(args) -> str:
    return args.norm[-1] if args.norm else "l2"


def _cmd_metric(args, pseudo: bool) -> int:
    x = load_matrix(args.x)
    y = load_matrix(args.y)
    spec = _norm_for(_single_norm(args), x.shape[0], args.seed)
    phases = eigenphases(x @ y.conj().T) if x.shape == y.shape else None
    if pseudo:
        res = pseudo_metric(spec, x, y)
        out = {"value": res.value, "r_star": res.r_star, "phases": phases.tolist()}
    else:
        out = {"value": metric(spec, x, y), "phases": phases.tolist()}
    _emit(json.dumps(out) + "\n", args)
    return EXIT_OK


def _cmd_eigenphases(args) -> int:
    x = load_matrix(args.x)
    out = {"phases": eigenphases(x).tolist(), "abs_phases": abs_phases(x).tolist()}
    _emit(json.dumps(out) + "\n", args)
    return EXIT_OK


def _cmd_cost(args) -> int:
    x = load_matrix(args.x)
    spec = _norm_for(_single_norm(args), x.shape[0], args.seed)
    res = pseudo_metric(spec, x, np.eye(x.shape[0]))
    _emit(json.dumps({"value": res.value, "r_star": res.r_star}) + "\n", args)
    return EXIT_OK


def _cmd_sample(args) -> int:
    if args.n < 1 or args.count < 1:
        raise UsageError("sample needs n >= 1 and count >= 1")
    if args.n > MAX_DIM:
        raise UsageError(f"n must be <= {MAX_DIM}")
    rng = np.random.default_rng(args.seed)
    mats = [
        haar_unitary(args.n, rng) if args.kind == "haar" else gue_hermitian(args.n, args.scale, rng)
        for _ in range(args.count)
    ]
    if args.output is not None and args.count > 1:
        stem, suffix = args.output.stem, args.output.suffix or ".json"
        for i, m in enumerate(mats):
            args.output.with_name(f"{stem}_{i}{suffix}").write_text(dump_matrix(m) + "\n", encoding="utf-8")
        return EXIT_OK
    _emit("".join(dump_matrix(m) + "\n" for m in mats), args)
    return EXIT_OK


# -- check -----------------------------------------------------------------


def _reports_for(suite: str, cfg: RunConfig, args, warn) -> list[dict]:
    """Run one suite over the configured grid; returns report dicts."""
    out: list[dict] = []
    tol = cfg.tol(suite)
    for n in cfg.dims:
        if suite in ("metric-axioms", "pseudo-metric-axioms", "cost-constraints"):
            for text in cfg.norm_specs:
                try:
                    spec = _norm_for(text, n, cfg.seed)
                except InvalidNormSpec as exc:
                    warn(f"skipping {suite} n={n} norm={text}: {exc}")
                    continue
                if suite == "metric-axioms":
                    rep = ineq.check_metric_axioms(spec, n, cfg.trials, cfg.seed, tol, cfg.threads)
                elif suite == "pseudo-metric-axioms":
                    rep = ineq.check_pseudo_metric_axioms(
                        spec, n, cfg.trials, cfg.seed, tol, args.oracle_points, cfg.threads
                    )
                else:
                    rep = ineq.check_cost_constraints(spec, n, cfg.trials, cfg.seed, tol, cfg.threads)
                out.append(rep.to_dict())
        elif suite == "kyfan-chain":
            out.append(ineq.check_kyfan_chain(n, cfg.trials, cfg.seed, tol, cfg.threads).to_dict())
        elif suite in ("unitary-lidskii", "hermitian-lidskii"):
            if args.p is not None and not 1 <= args.p <= n:
                warn(f"skipping {suite} n={n}: p={args.p} out of range")
                continue
            fn = ineq.check_unitary_lidskii if suite == "unitary-lidskii" else ineq.check_hermitian_lidskii
            out.append(fn(n, args.p, cfg.trials, cfg.seed, tol, cfg.threads).to_dict())
        elif suite == "perturbation":
            for eps in args.eps:
                out.append(ineq.check_perturbation(n, eps, cfg.trials, cfg.seed, tol, cfg.threads).to_dict())
        elif suite == "general-lidskii":
            sets = GeneralIndexSets.from_json(json.loads(args.sets))
            if max(sets.I + sets.J + sets.K) > n:
                warn(f"skipping {suite} n={n}: index sets exceed dimension")
                continue
            out.append(ineq.check_general_lidskii(sets, n, cfg.trials, cfg.seed, tol, cfg.threads).to_dict())
        elif suite == "schur-transfer":
            for h in ineq.builtin_transfer_functionals(n):
                try:
                    rep = ineq.check_schur_transfer(h, n, cfg.trials, cfg.seed, tol, threads=cfg.threads)
                    out.append(rep.to_dict())
                except PremiseViolation as exc:
                    out.append({
                        "suite": suite, "n": n, "norm": None, "params": {"functional": str(h)},
                        "trials": cfg.trials, "violations": 1, "worst_margin": None,
                        "worst_trial": None, "tol": tol, "seed": cfg.seed, "worst_case": {},
                        "premise_violation": str(exc),
                    })
    return out


_FLAT_FIELDS = ("suite", "n", "norm", "params", "trials", "violations", "worst_margin", "tol", "seed")


def _format_reports(reports: list[dict], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in reports)
    rows = [
        {k: (json.dumps(r[k], sort_keys=True) if k == "params" else r[k]) for k in _FLAT_FIELDS}
        for r in reports
    ]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_FLAT_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    cells = [[str(r[k]) for k in _FLAT_FIELDS] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h) for i, h in enumerate(_FLAT_FIELDS)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(_FLAT_FIELDS, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    bad = sum(r["violations"] for r in reports)
    lines.append(f"{len(reports)} report(s), {bad} violating trial(s)")
    return "\n".join(lines) + "\n"


def _check_norm_usable(text: str, cfg: RunConfig) -> None:
    """A norm that fits none of the dimensions is a usage error, not a skip."""
    errors = []
    for n in cfg.dims:
        try:
            _norm_for(text, n, cfg.seed)
            return
        except InvalidNormSpec as exc:
            errors.append(exc)
    raise UsageError(f"norm {text!r} is invalid for every requested dimension: {errors[-1]}")


def _cmd_check(args, overrides: dict[str, float]) -> int:
    if args.suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {args.suite!r}; valid: {', '.join(SUITES + ('all',))}")
    cfg = RunConfig(
        seed=args.seed,
        dims=args.dims,
        trials=args.trials,
        norm_specs=list(args.norm) if args.norm else list(DEFAULT_NORMS),
        tol_scale=args.tol,
        tol_overrides=overrides,
        output_format=args.format,
        threads=args.threads,
    )
    suites = SUITES if args.suite == "all" else (args.suite,)
    for text in cfg.norm_specs:
        _check_norm_usable(text, cfg)

    def warn(msg):
        print(f"umetrics: {msg}", file=sys.stderr)

    reports: list[dict] = []
    for s in suites:
        reports.extend(_reports_for(s, cfg, args, warn))
    _emit(_format_reports(reports, cfg.output_format), args)
    return EXIT_VIOLATION if any(r["violations"] for r in reports) else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv, overrides = _split_tol_overrides(argv)
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_OK if exc.code == 0 else EXIT_ERROR
        _apply_defaults(args)
        if args.command == "metric":
            return _cmd_metric(args, pseudo=False)
        if args.command == "pseudo-metric":
            return _cmd_metric(args, pseudo=True)
        if args.command == "eigenphases":
            return _cmd_eigenphases(args)
        if args.command == "cost":
            return _cmd_cost(args)
        if args.command == "sample":
            return _cmd_sample(args)
        return _cmd_check(args, overrides)
    except (UsageError, UMetricsError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"umetrics: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
