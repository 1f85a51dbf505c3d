"""Report records returned by the randomized checkers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np


def to_jsonable(value: Any) -> Any:
    """Convert arrays (complex matrices included) to plain JSON values."""
    from .linalg import matrix_to_json

    if isinstance(value, np.ndarray):
        if value.ndim == 2 and np.iscomplexobj(value):
            return matrix_to_json(value)
        if np.iscomplexobj(value):
            return [[float(z.real), float(z.imag)] for z in value.ravel()]
        return value.tolist()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


@dataclass
class ValidationReport:
    """Outcome of a randomized axiom or isotonicity check."""

    name: str
    trials: int
    violations: list[dict] = field(default_factory=list)

    def add(self, prop: str, **inputs) -> None:
        self.violations.append({"property": prop, **to_jsonable(inputs)})

    @property
    def ok(self) -> bool:
        return not self.violations

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for v in self.violations:
            out[v["property"]] = out.get(v["property"], 0) + 1
        return out


@dataclass(frozen=True)
class TrialReport:
    """Summary of one randomized suite run.

    ``worst_margin`` is the most negative slack seen over all trials (slack
    is ``rhs - lhs`` of the checked inequality, or ``-|difference|`` for an
    equality). A trial counts as a violation when its margin is below
    ``-tol``. ``worst_case`` holds the inputs of the worst trial and can be
    replayed with :func:`umetrics.inequalities.replay`.
    """

    suite: str
    n: int
    trials: int
    violations: int
    worst_margin: float
    worst_trial: int
    worst_case: dict
    seed: int
    tol: float
    norm: str | None = None
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "norm": self.norm,
            "params": to_jsonable(self.params),
            "trials": self.trials,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "worst_trial": self.worst_trial,
            "tol": self.tol,
            "seed": self.seed,
            "worst_case": to_jsonable(self.worst_case),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
