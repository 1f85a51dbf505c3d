"""Numerical tolerances shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Tolerance record.

    Attributes
    ----------
    unitarity : float
        Max ``||U U* - I||_F`` accepted as unitary.
    hermiticity : float
        Max ``||H - H*||_F`` accepted as Hermitian.
    residual_factor : float
        Eigendecompositions must satisfy
        ``||M V - V diag(w)||_F <= residual_factor * n * ||M||_F``.
    branch : float
        Arguments within this distance of ``-pi`` are mapped to ``+pi``.
    modulus : float
        Max deviation of a unitary eigenvalue modulus from 1.
    """

    unitarity: float = 1e-8
    hermiticity: float = 1e-8
    residual_factor: float = 1e-10
    branch: float = 1e-12
    modulus: float = 1e-9

    def scaled(self, factor: float) -> "Tolerances":
        return replace(
            self,
            unitarity=self.unitarity * factor,
            hermiticity=self.hermiticity * factor,
            residual_factor=self.residual_factor * factor,
            modulus=self.modulus * factor,
        )


DEFAULT_TOLERANCES = Tolerances()
