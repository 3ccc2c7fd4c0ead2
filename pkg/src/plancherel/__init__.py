"""Spectral decomposition of the Fourier-Plancherel operator on sampled grids."""

from .eigenspace import EigenLabel, coefficient_filter, decompose, project
from .errors import (
    DomainError,
    GridMismatch,
    NotEigenfunctionError,
    ParityError,
    PoleError,
    ResolutionError,
    SpectralError,
    TailError,
    WeightError,
)
from .fourier import (
    FourierOperator,
    apply_fourier,
    commutation_check,
    cosine_transform,
    sine_transform,
)
from .grid import (
    CriticalLineFunction,
    GridFunction,
    GridSpec,
    HalfLineFunction,
    LogGrid,
    extend_to_line,
    inner_product,
    restrict_to_half_line,
)
from .hardy_titchmarsh import (
    PsiFunction,
    analyze_eigenfunction,
    parseval_psi_check,
    synthesize_eigenfunction,
)
from .hermite import (
    CoefficientVector,
    HermiteBasis,
    apply_hermite_operator,
    apply_lowering,
    apply_raising,
    build_basis,
    domain_diagnostic,
    expand,
    synthesize,
)
from .mellin import (
    MellinPair,
    mellin_forward,
    mellin_functional_equation_check,
    mellin_inverse,
)
from .special import check_gamma_identities, cos_sin_moment, gamma, log_gamma

__version__ = "0.1.0"

__all__ = [
    "CoefficientVector",
    "CriticalLineFunction",
    "DomainError",
    "EigenLabel",
    "FourierOperator",
    "GridFunction",
    "GridMismatch",
    "GridSpec",
    "HalfLineFunction",
    "HermiteBasis",
    "LogGrid",
    "MellinPair",
    "NotEigenfunctionError",
    "ParityError",
    "PoleError",
    "PsiFunction",
    "ResolutionError",
    "SpectralError",
    "TailError",
    "WeightError",
    "analyze_eigenfunction",
    "apply_fourier",
    "apply_hermite_operator",
    "apply_lowering",
    "apply_raising",
    "build_basis",
    "check_gamma_identities",
    "coefficient_filter",
    "commutation_check",
    "cos_sin_moment",
    "cosine_transform",
    "decompose",
    "domain_diagnostic",
    "expand",
    "extend_to_line",
    "gamma",
    "inner_product",
    "log_gamma",
    "mellin_forward",
    "mellin_functional_equation_check",
    "mellin_inverse",
    "parseval_psi_check",
    "project",
    "restrict_to_half_line",
    "sine_transform",
    "synthesize",
    "synthesize_eigenfunction",
]
