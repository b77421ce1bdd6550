"""High-precision optimal quadrature rules with shifted boundary nodes.

The package constructs quadrature weights minimizing the error-functional
norm over the Sobolev space of functions with square-integrable m-th
derivative on [0, 1], for node layouts whose boundary nodes are pulled
inward by configurable offsets.  Weights, decay parameters and the norm of
the error functional are computed in closed form at arbitrary binary
precision, and a dense reference solver of the full optimality system is
included for cross-checking.
"""
from .exact_math import (
    EFPolynomial,
    bernoulli,
    euler_frobenius,
    fwd_diff_at,
    fwd_diff_zero,
    geometric_power_sum,
    power_sum,
)
from .ef_roots import (
    PrecisionConfig,
    PrecisionExhausted,
    RootCountMismatch,
    RootSet,
    unit_disk_roots,
)
from .optimal_solver import (
    OptimalFormula,
    QuadratureSpec,
    SingularSystem,
    SolveResult,
    assemble_coefficients,
    build_d_system_t1,
    build_general_system,
    moment_residuals,
    optimal_formula,
    solve_dense,
)
from .error_norm import (
    NormReport,
    error_bound,
    norm_report,
    norm_squared_closed,
    norm_squared_direct,
)
from .oracle import (
    OracleSolution,
    SpecMismatch,
    check_against_formula,
    solve_full_system,
)
from .golden_tables import TABLES, GoldenTable, table_ids

__version__ = "0.1.0"

__all__ = [
    "EFPolynomial",
    "GoldenTable",
    "NormReport",
    "OptimalFormula",
    "OracleSolution",
    "PrecisionConfig",
    "PrecisionExhausted",
    "QuadratureSpec",
    "RootCountMismatch",
    "RootSet",
    "SingularSystem",
    "SolveResult",
    "SpecMismatch",
    "TABLES",
    "assemble_coefficients",
    "bernoulli",
    "build_d_system_t1",
    "build_general_system",
    "check_against_formula",
    "error_bound",
    "euler_frobenius",
    "fwd_diff_at",
    "fwd_diff_zero",
    "geometric_power_sum",
    "moment_residuals",
    "norm_report",
    "norm_squared_closed",
    "norm_squared_direct",
    "optimal_formula",
    "power_sum",
    "solve_dense",
    "solve_full_system",
    "table_ids",
    "unit_disk_roots",
]
