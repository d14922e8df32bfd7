"""Closed-form root solving for real polynomials of degree 2-4.

The solvers write a candidate root as ``x + omega*y`` for a root of unity
``omega``, separate real and imaginary parts, and solve the resulting real
systems; an independent simultaneous-iteration oracle cross-checks every
result.
"""

from .oracle import (
    OracleConfig,
    OracleResult,
    find_roots,
    max_pairing_distance,
    pair_roots,
)
from .parser import ParseError, format_polynomial, parse_polynomial
from .poly_core import (
    DepressedCubic,
    DepressedQuartic,
    RealPolynomial,
    RootSet,
    depress_cubic,
    depress_quartic,
    derivative,
    evaluate,
    reconstruct_cubic,
    reconstruct_quartic,
    undepress,
)
from .split_solver import (
    OMEGA,
    OMEGA_ANSATZ,
    ONE_MINUS_OMEGA,
    ReducedCubicCoefficients,
    SplitAnsatz,
    SplitResidual,
    UnsupportedDegreeError,
    cubic_naive_split_residual,
    cubic_omega_split_residual,
    naive_cubic_reduction,
    omega_decompose,
    quadratic_split_residual,
    quartic_resolvent_coefficients,
    quartic_split_residual,
    solve,
    solve_depressed_cubic,
    solve_depressed_quartic,
    solve_quadratic,
)

__all__ = [
    "OMEGA",
    "OMEGA_ANSATZ",
    "ONE_MINUS_OMEGA",
    "DepressedCubic",
    "DepressedQuartic",
    "OracleConfig",
    "OracleResult",
    "ParseError",
    "RealPolynomial",
    "ReducedCubicCoefficients",
    "RootSet",
    "SplitAnsatz",
    "SplitResidual",
    "UnsupportedDegreeError",
    "cubic_naive_split_residual",
    "cubic_omega_split_residual",
    "depress_cubic",
    "depress_quartic",
    "derivative",
    "evaluate",
    "find_roots",
    "format_polynomial",
    "max_pairing_distance",
    "naive_cubic_reduction",
    "omega_decompose",
    "pair_roots",
    "parse_polynomial",
    "quadratic_split_residual",
    "quartic_resolvent_coefficients",
    "quartic_split_residual",
    "reconstruct_cubic",
    "reconstruct_quartic",
    "solve",
    "solve_depressed_cubic",
    "solve_depressed_quartic",
    "solve_quadratic",
    "undepress",
]

__version__ = "0.1.0"
