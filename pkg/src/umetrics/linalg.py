"""Dense complex matrix substrate.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``. The
functions here validate their inputs, decompose unitary and Hermitian
matrices with a residual guarantee, and draw Haar/GUE samples from an
explicit ``numpy.random.Generator``.
"""

from __future__ import annotations

import contextlib
import json
import threading
from dataclasses import dataclass
from typing import Any

import numpy as np
import scipy.linalg

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    DimensionMismatch,
    HermiticityViolation,
    InvalidMatrix,
    NumericalFailure,
    UnitarityViolation,
)

__all__ = [
    "EigenSystem",
    "as_matrix",
    "matmul",
    "adjoint",
    "unitarity_defect",
    "hermiticity_defect",
    "eig_unitary",
    "eig_hermitian",
    "exp_i_hermitian",
    "log_unitary",
    "haar_unitary",
    "gue_hermitian",
    "residual",
    "ResidualLog",
    "track_residuals",
    "matrix_to_json",
    "matrix_from_json",
    "load_matrix",
    "dump_matrix",
]


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues and column eigenvectors of a matrix."""

    values: np.ndarray
    vectors: np.ndarray

    def __iter__(self):
        yield self.values
        yield self.vectors


def as_matrix(m: Any) -> np.ndarray:
    """Coerce ``m`` to a finite 2-D complex array."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or 0 in arr.shape:
        raise InvalidMatrix(f"expected a nonempty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidMatrix("matrix has non-finite entries")
    return arr


def _square(m: Any) -> np.ndarray:
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    return arr


def matmul(a: Any, b: Any) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply shapes {a.shape} and {b.shape}")
    return a @ b


def adjoint(m: Any) -> np.ndarray:
    """Conjugate transpose (a fresh array, not a view)."""
    return np.ascontiguousarray(as_matrix(m).conj().T)


def unitarity_defect(u: np.ndarray) -> float:
    n = u.shape[0]
    return float(np.linalg.norm(u @ u.conj().T - np.eye(n), "fro"))


def hermiticity_defect(h: np.ndarray) -> float:
    return float(np.linalg.norm(h - h.conj().T, "fro"))


def residual(m: np.ndarray, eig: EigenSystem) -> float:
    """Frobenius residual ``||M V - V diag(w)||_F``."""
    return float(np.linalg.norm(m @ eig.vectors - eig.vectors * eig.values, "fro"))


@dataclass
class ResidualLog:
    """Worst relative residual ``||MV - VW||_F / (n ||M||_F)`` seen so far."""

    decompositions: int = 0
    worst_ratio: float = 0.0


_active_logs: list[ResidualLog] = []
_log_lock = threading.Lock()


@contextlib.contextmanager
def track_residuals():
    """Record every eigendecomposition residual computed inside the block."""
    log = ResidualLog()
    with _log_lock:
        _active_logs.append(log)
    try:
        yield log
    finally:
        with _log_lock:
            _active_logs.remove(log)


def _check_residual(m: np.ndarray, eig: EigenSystem, tol: Tolerances) -> None:
    n = m.shape[0]
    scale = n * float(np.linalg.norm(m, "fro"))
    bound = tol.residual_factor * scale
    res = residual(m, eig)
    if _active_logs:
        ratio = res / scale if scale > 0 else 0.0
        with _log_lock:
            for log in _active_logs:
                log.decompositions += 1
                log.worst_ratio = max(log.worst_ratio, ratio)
    if res > bound:
        raise NumericalFailure(f"eigendecomposition residual {res:.3e} exceeds {bound:.3e}")


def eig_unitary(u: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> EigenSystem:
    """Eigendecomposition of a unitary matrix.

    Uses the complex Schur form ``U = Z T Z*``. For a normal matrix ``T`` is
    diagonal up to rounding, so ``Z`` is a unitary eigenvector basis even
    when eigenvalues are degenerate.

    Raises
    ------
    UnitarityViolation
        If ``||U U* - I||_F`` exceeds ``tol.unitarity``.
    NumericalFailure
        If LAPACK fails, an eigenvalue leaves the unit circle, or the
        residual bound is broken.
    """
    u = _square(u)
    defect = unitarity_defect(u)
    if defect > tol.unitarity:
        raise UnitarityViolation(defect, tol.unitarity)
    try:
        t, z = scipy.linalg.schur(u, output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalFailure(f"Schur decomposition failed: {exc}") from exc
    values = np.diag(t).copy()
    worst = float(np.max(np.abs(np.abs(values) - 1.0)))
    if worst > tol.modulus:
        raise NumericalFailure(f"unitary eigenvalue modulus off by {worst:.3e}")
    eig = EigenSystem(values, z)
    _check_residual(u, eig, tol)
    return eig


def eig_hermitian(h: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""
    h = _square(h)
    defect = hermiticity_defect(h)
    if defect > tol.hermiticity:
        raise HermiticityViolation(defect, tol.hermiticity)
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"Hermitian eigensolver failed: {exc}") from exc
    eig = EigenSystem(w[::-1].copy(), np.ascontiguousarray(v[:, ::-1]))
    _check_residual(h, eig, tol)
    return eig


def exp_i_hermitian(h: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Return ``exp(iH)`` for Hermitian ``H``."""
    w, v = eig_hermitian(h, tol)
    return (v * np.exp(1j * w)) @ v.conj().T


def log_unitary(u: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Principal logarithm: Hermitian ``A`` with spectrum in (-pi, pi] and ``exp(iA) = U``."""
    vals, vecs = eig_unitary(u, tol)
    phases = np.angle(vals)
    phases[phases <= -np.pi + tol.branch] = np.pi
    a = (vecs * phases) @ vecs.conj().T
    return 0.5 * (a + a.conj().T)


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed element of U(n).

    QR of a complex Ginibre matrix, with each column of Q rescaled by the
    phase of the matching diagonal entry of R so that R has a positive
    diagonal (which makes the factorization unique).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def gue_hermitian(n: int, scale: float, rng: np.random.Generator) -> np.ndarray:
    """GUE sample ``scale * (G + G*) / 2``; Hermitian exactly, not just to rounding."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not scale > 0:
        raise ValueError("scale must be positive")
    g = scale * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    return 0.5 * (g + g.conj().T)


# -- matrix JSON -------------------------------------------------------------


def matrix_to_json(m: Any) -> dict:
    """Encode as ``{"rows", "cols", "data": [[re, im], ...]}`` (row-major)."""
    arr = as_matrix(m)
    flat = arr.ravel()
    return {
        "rows": int(arr.shape[0]),
        "cols": int(arr.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_json(obj: Any) -> np.ndarray:
    if not isinstance(obj, dict) or not {"rows", "cols", "data"} <= obj.keys():
        raise InvalidMatrix('matrix JSON must be an object with "rows", "cols" and "data"')
    rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise InvalidMatrix(f"rows/cols must be positive integers, got {rows!r}, {cols!r}")
    if not isinstance(data, list) or len(data) != rows * cols:
        got = len(data) if isinstance(data, list) else type(data).__name__
        raise InvalidMatrix(f"data must hold rows*cols = {rows * cols} entries, got {got}")
    try:
        entries = [complex(float(re), float(im)) for re, im in data]
    except (TypeError, ValueError) as exc:
        raise InvalidMatrix("each data entry must be a [re, im] pair of numbers") from exc
    return as_matrix(np.array(entries, dtype=np.complex128).reshape(rows, cols))


def load_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidMatrix(f"{path}: not valid JSON ({exc})") from exc
    return matrix_from_json(obj)


def dump_matrix(m: Any) -> str:
    return json.dumps(matrix_to_json(m))
