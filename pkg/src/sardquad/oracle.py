"""Dense reference solver for the full coefficient optimality system.

Independent of the closed-form pipeline: it assembles the complete
stationarity system of the constrained minimization -- one equation per
node coupling all coefficients through the |x - y|^(2m-1) kernel plus the
Lagrange-multiplier polynomial, together with the m moment equations --
and solves it by LU elimination at working precision.  Used as ground
truth for small instances.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from mpmath import mpf, workprec

from .ef_roots import PrecisionConfig
from .optimal_solver import OptimalFormula, QuadratureSpec, SingularSystem, solve_dense

__all__ = [
    "OracleSolution",
    "SingularSystem",
    "SpecMismatch",
    "check_against_formula",
    "solve_full_system",
]

SIZE_GUARD = 2000  # dense solve guard: N + 1 + m must stay below this


class SpecMismatch(Exception):
    """Oracle solution and formula belong to different problem instances."""


@dataclass(frozen=True)
class OracleSolution:
    """Coefficients and Lagrange multipliers of the full dense solve."""

    spec: QuadratureSpec
    coefficients: tuple
    lambdas: tuple
    residual: object


def build_full_system(spec: QuadratureSpec, working_bits: int = 256):
    """Assemble the (N+1+m) x (N+1+m) stationarity-plus-moments system."""
    m, N = spec.m, spec.N
    size = N + 1 + m
    f1 = 2 * factorial(2 * m - 1)
    f2 = 2 * factorial(2 * m)
    with workprec(working_bits):
        xs = [mpf(x.numerator) / x.denominator for x in spec.nodes()]
        matrix = [[mpf(0)] * size for _ in range(size)]
        rhs = [mpf(0)] * size
        for b in range(N + 1):
            row = matrix[b]
            xb = xs[b]
            for g in range(N + 1):
                row[g] = abs(xb - xs[g]) ** (2 * m - 1) / f1
            for alpha in range(m):
                row[N + 1 + alpha] = xb**alpha if alpha else mpf(1)
            rhs[b] = (xb ** (2 * m) + (1 - xb) ** (2 * m)) / f2
        for alpha in range(m):
            row = matrix[N + 1 + alpha]
            for g in range(N + 1):
                row[g] = xs[g] ** alpha if alpha else mpf(1)
            rhs[N + 1 + alpha] = mpf(1) / (alpha + 1)
    return matrix, rhs


def solve_full_system(
    spec: QuadratureSpec, prec: PrecisionConfig | None = None
) -> OracleSolution:
    """Solve the full system; unique solution per the underlying theory.

    Raises ValueError when the instance exceeds the dense-solve guard and
    SingularSystem if elimination fails at working precision.
    """
    prec = prec or PrecisionConfig()
    size = spec.N + 1 + spec.m
    if size > SIZE_GUARD:
        raise ValueError(f"system size {size} exceeds dense-solve guard {SIZE_GUARD}")
    matrix, rhs = build_full_system(spec, prec.working_bits)
    sol, residual = solve_dense(matrix, rhs, prec.working_bits)
    return OracleSolution(
        spec=spec,
        coefficients=tuple(sol[: spec.N + 1]),
        lambdas=tuple(sol[spec.N + 1 :]),
        residual=residual,
    )


def check_against_formula(oracle: OracleSolution, formula: OptimalFormula):
    """Max absolute coefficient deviation between the two routes."""
    a, b = oracle.spec, formula.spec
    if (a.m, a.N, a.etas) != (b.m, b.N, b.etas):
        raise SpecMismatch(
            f"oracle instance (m={a.m}, N={a.N}) does not match "
            f"formula instance (m={b.m}, N={b.N})"
        )
    with workprec(formula.prec.working_bits):
        return max(
            abs(x - y) for x, y in zip(oracle.coefficients, formula.coefficients)
        )
