"""Error-functional norm of an assembled quadrature formula.

Two evaluation routes are provided.  The closed form costs O(m^2) and uses
the decay parameters, Bernoulli numbers and forward differences; it is the
production path.  The direct route evaluates the full O(N^2) quadratic form
in the coefficients and serves as an independent check.

The two routes agree (to working precision) exactly when the coefficient
vector solves the full stationarity system of the underlying minimization;
for boundary layouts where the decay-parameter construction and the dense
reference solver differ (see the repo notes), the closed form reproduces
the published constants while the direct form reports the actual norm of
the assembled rule.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import mpmath
from mpmath import mpf, workprec

from .exact_math import bernoulli, fwd_diff_at, fwd_diff_zero
from .ef_roots import RootSet
from .optimal_solver import OptimalFormula

__all__ = [
    "NormReport",
    "error_bound",
    "norm_report",
    "norm_squared_closed",
    "norm_squared_direct",
]


@dataclass(frozen=True)
class NormReport:
    """Squared norms from both routes plus their relative disagreement."""

    norm_squared_closed: object
    norm_squared_direct: object
    norm: object
    agreement: object


def _lift_bernoulli(n: int):
    b = bernoulli(n)
    return mpf(b.numerator) / b.denominator


def norm_squared_closed(formula: OptimalFormula, roots: RootSet, working_bits=None):
    """Closed-form squared norm of the error functional.

    Single-offset layout:
      (-1)^(m+1) [ h^2m B_2m/(2m)! + 2 h^(2m+1)/(2m)! ( eta0^2m/2
        + sum_k d_k [ sum_{i=1}^{2m} (-q^(N+i) + (-1)^i q)/(1-q)^(i+1) D^i 0^2m
                      + (q - q^N) eta0^2m / (q - 1) ] ) ]

    General layout: same leading term with the bracket
      sum_b (C_b/h eta_b^2m - b^2m)
        - sum_k d_k sum_{i=0}^{2m} ((-1)^i q^(t+i) - q^(N-t+1))/(q-1)^(i+1) D^i t^2m,
    which reduces exactly to the single-offset bracket at t = 1.
    """
    spec = formula.spec
    m, N, t = spec.m, spec.N, spec.t
    bits = working_bits or formula.prec.working_bits
    with workprec(bits):
        h = mpf(1) / N
        lead = h ** (2 * m) * _lift_bernoulli(2 * m) / factorial(2 * m)
        if t == 1:
            e0 = mpf(spec.etas[0].numerator) / spec.etas[0].denominator
            inner = e0 ** (2 * m) / 2
            for dk, q in zip(formula.d, roots):
                s = mpf(0)
                for i in range(1, 2 * m + 1):
                    d0 = fwd_diff_zero(i, 2 * m)
                    if d0:
                        s += (-(q ** (N + i)) + (-1) ** i * q) / (1 - q) ** (i + 1) * d0
                s += (q - q**N) * e0 ** (2 * m) / (q - 1)
                inner += dk * s
        else:
            inner = mpf(0)
            for b in range(t):
                eb = mpf(spec.etas[b].numerator) / spec.etas[b].denominator
                inner += formula.boundary_c[b] / h * eb ** (2 * m) - mpf(b) ** (2 * m)
            for dk, q in zip(formula.d, roots):
                s = mpf(0)
                for i in range(2 * m + 1):
                    dt = fwd_diff_at(i, t, 2 * m)
                    if dt:
                        s += ((-1) ** i * q ** (t + i) - q ** (N - t + 1)) / (
                            q - 1
                        ) ** (i + 1) * int(dt)
                inner -= dk * s
        return (-1) ** (m + 1) * (lead + 2 * h ** (2 * m + 1) / factorial(2 * m) * inner)


def norm_squared_direct(formula: OptimalFormula, working_bits=None):
    """Quadratic form of the error functional, O(N^2).

    (-1)^m ( sum_{b,g} C_b C_g |x_b - x_g|^(2m-1) / (2 (2m-1)!)
             - 2 sum_b C_b (x_b^2m + (1-x_b)^2m) / (2 (2m)!) + 1/(2m+1)! )
    """
    spec = formula.spec
    m = spec.m
    bits = working_bits or formula.prec.working_bits
    with workprec(bits):
        xs = formula.nodes
        C = formula.coefficients
        f1 = 2 * factorial(2 * m - 1)
        f2 = 2 * factorial(2 * m)
        pair = mpf(0)
        for i, ci in enumerate(C):
            for j in range(i):
                pair += 2 * ci * C[j] * (xs[i] - xs[j]) ** (2 * m - 1)
        pair /= f1
        single = mpf(0)
        for ci, x in zip(C, xs):
            single += ci * (x ** (2 * m) + (1 - x) ** (2 * m))
        single /= f2
        return (-1) ** m * (pair - 2 * single + mpf(1) / factorial(2 * m + 1))


def norm_report(
    formula: OptimalFormula,
    roots: RootSet | None = None,
    agreement_tolerance=None,
    working_bits=None,
) -> NormReport:
    """Evaluate both routes, attach the norm to the formula, and report.

    ``agreement`` is |closed - direct| / |direct|.  If a tolerance is given
    and exceeded, ValueError is raised.
    """
    roots = roots or formula.roots
    bits = working_bits or formula.prec.working_bits
    closed = norm_squared_closed(formula, roots, bits)
    direct = norm_squared_direct(formula, bits)
    with workprec(bits):
        agreement = abs(closed - direct) / abs(direct)
        norm = mpmath.sqrt(closed)
    if agreement_tolerance is not None and agreement > mpf(agreement_tolerance):
        raise ValueError(
            f"norm routes disagree: relative difference {mpmath.nstr(agreement, 5)}"
        )
    formula.norm_squared = closed
    formula.norm = norm
    return NormReport(
        norm_squared_closed=closed,
        norm_squared_direct=direct,
        norm=norm,
        agreement=agreement,
    )


def error_bound(formula: OptimalFormula, phi_norm) -> object:
    """Cauchy-Schwarz bound phi_norm * ||l|| on the quadrature error."""
    if formula.norm is None:
        raise ValueError("formula norm not computed; call norm_report first")
    with workprec(formula.prec.working_bits):
        p = mpf(phi_norm) if not isinstance(phi_norm, mpf) else phi_norm
        if p < 0:
            raise ValueError("phi_norm must be >= 0")
        return p * formula.norm
