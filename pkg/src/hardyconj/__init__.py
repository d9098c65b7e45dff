"""Conjugations on truncated Hardy-space coefficient vectors and complex
symmetric Toeplitz finite sections, with numerical certification of every
construction against an operator-residual oracle."""

from .core import (
    AntilinearMap,
    adjoint,
    apply_antilinear,
    apply_linear,
    as_operator,
    as_vector,
    frobenius_norm,
    inner_product,
)
from .conjugations import (
    ConjugationCert,
    NotUnitaryError,
    canonical_conjugation,
    coefficient_matrix,
    conjugation_from_unitary,
    factor_diagonal,
    orthonormalize,
    phase_conjugation,
    random_unitary,
    rotation_conjugation,
    sequence_conjugation,
    sequence_unitary,
    squared_powers,
    unimodular,
    verify_conjugation,
)
from .toeplitz import (
    EXPLORE_MODES,
    ConditionReport,
    ExplorationRecord,
    LaurentSymbol,
    SymmetryReport,
    diagonal_multipliers,
    entrywise_condition,
    evaluate_on_grid,
    explore_symmetry,
    fourier_coefficients,
    generate_symmetric_symbol,
    matrix_bandwidth,
    multiply_truncate,
    onesided_condition,
    random_symbol,
    rotation_condition,
    rotation_multipliers,
    run_trial,
    sequence_condition,
    sequence_entrywise_condition,
    sequence_multipliers,
    summarize_exploration,
    symmetry_report,
    symmetry_residual,
    toeplitz_section,
)

__version__ = "0.1.0"

__all__ = [
    "AntilinearMap",
    "ConditionReport",
    "ConjugationCert",
    "EXPLORE_MODES",
    "ExplorationRecord",
    "LaurentSymbol",
    "NotUnitaryError",
    "SymmetryReport",
    "adjoint",
    "apply_antilinear",
    "apply_linear",
    "as_operator",
    "as_vector",
    "canonical_conjugation",
    "coefficient_matrix",
    "conjugation_from_unitary",
    "diagonal_multipliers",
    "entrywise_condition",
    "evaluate_on_grid",
    "explore_symmetry",
    "factor_diagonal",
    "fourier_coefficients",
    "frobenius_norm",
    "generate_symmetric_symbol",
    "inner_product",
    "matrix_bandwidth",
    "multiply_truncate",
    "onesided_condition",
    "orthonormalize",
    "phase_conjugation",
    "random_symbol",
    "random_unitary",
    "rotation_condition",
    "rotation_conjugation",
    "rotation_multipliers",
    "run_trial",
    "sequence_condition",
    "sequence_conjugation",
    "sequence_entrywise_condition",
    "sequence_multipliers",
    "sequence_unitary",
    "squared_powers",
    "summarize_exploration",
    "symmetry_report",
    "symmetry_residual",
    "toeplitz_section",
    "unimodular",
    "verify_conjugation",
]
