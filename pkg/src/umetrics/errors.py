"""Exception hierarchy."""


class UMetricsError(Exception):
    """Base class for every error raised by this package."""


class InvalidMatrix(UMetricsError, ValueError):
    """Input is not a finite two-dimensional array or has a bad JSON layout."""


class DimensionMismatch(UMetricsError, ValueError):
    """Operand shapes are incompatible."""


class UnitarityViolation(UMetricsError, ValueError):
    """Matrix fails the unitarity precondition."""

    def __init__(self, defect: float, tol: float):
        self.defect = defect
        self.tol = tol
        super().__init__(f"matrix is not unitary: ||U U* - I||_F = {defect:.3e} > {tol:.1e}")


class HermiticityViolation(UMetricsError, ValueError):
    """Matrix fails the Hermiticity precondition."""

    def __init__(self, defect: float, tol: float):
        self.defect = defect
        self.tol = tol
        super().__init__(f"matrix is not Hermitian: ||H - H*||_F = {defect:.3e} > {tol:.1e}")


class NumericalFailure(UMetricsError, ArithmeticError):
    """An eigensolver did not converge or broke its residual contract."""


class InvalidNormSpec(UMetricsError, ValueError):
    """Malformed or invalid symmetric norm description."""


class InvalidIndexSet(UMetricsError, ValueError):
    """Index triple or index sets violate their invariants."""


class PremiseViolation(UMetricsError):
    """The hypothesis of a transfer argument was refuted on a sample."""

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)
