"""Symmetric-norm induced metrics on the unitary group and randomized
verification of eigenphase inequalities."""

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    DimensionMismatch,
    HermiticityViolation,
    InvalidIndexSet,
    InvalidMatrix,
    InvalidNormSpec,
    NumericalFailure,
    PremiseViolation,
    UMetricsError,
    UnitarityViolation,
)
from .linalg import (
    EigenSystem,
    adjoint,
    eig_hermitian,
    eig_unitary,
    exp_i_hermitian,
    gue_hermitian,
    haar_unitary,
    log_unitary,
    matmul,
)
from .majorization import (
    GeneralIndexSets,
    IndexTriple,
    check_schur_convex,
    enumerate_triples,
    lidskii_lhs_rhs,
    weakly_submajorized,
)
from .metrics import (
    PhaseMinimum,
    abs_phases,
    cost,
    eigenphases,
    metric,
    pseudo_metric,
    pseudo_metric_grid_oracle,
)
from .norms import (
    INF,
    SymmetricNormSpec,
    evaluate,
    ky_fan_matrix,
    ky_fan_vector,
    parse_norm,
    validate_symmetric_norm,
)
from .reports import TrialReport, ValidationReport

__version__ = "0.1.0"
