"""Construction of the quadrature coefficient systems and their solution.

Two solver routes are provided.  The single-offset route (one fractional
boundary offset eta0; only the first and last nodes are shifted) works for
every smoothness order m >= 2: the m-1 interior-decay parameters d_k solve a
dense (m-1) x (m-1) system and the boundary weight follows in closed form.
The general route handles the full boundary-layer node family (t offsets on
each side, t tied to m) through the coupled (m-1+t)-dimensional system in
(d_1..d_{m-1}, C_0..C_{t-1}).

All assembly and elimination run at a configurable binary precision; node
positions and offsets are kept as exact rationals until lifted.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
from mpmath import mpf, workprec

from .exact_math import bernoulli, fwd_diff_at, fwd_diff_zero
from .ef_roots import PrecisionConfig, PrecisionExhausted, RootSet, unit_disk_roots

__all__ = [
    "OptimalFormula",
    "QuadratureSpec",
    "SingularSystem",
    "SolveResult",
    "assemble_coefficients",
    "build_d_system_t1",
    "build_general_system",
    "moment_residuals",
    "optimal_formula",
    "solve_dense",
]


class SingularSystem(Exception):
    """Dense elimination hit a vanishing pivot at working precision."""


def t_rule(m: int) -> int:
    """Number of shifted nodes per side tied to the smoothness order."""
    return m // 2 if m % 2 == 0 else m // 2 + 1


def _as_fraction(x) -> Fraction:
    """Exact conversion; floats are read through their shortest decimal repr.

    A bare float like 0.205 is taken to mean the decimal 41/200, not the
    binary double nearest to it.  Pass a Fraction or a string to control the
    value exactly.
    """
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class QuadratureSpec:
    """Problem instance: smoothness order m, node count N, boundary offsets.

    The node layout places ``x_i = etas[i] * h`` and ``x_{N-i} = 1 -
    etas[i] * h`` for i < t and uniform nodes ``x_b = b * h`` in between,
    h = 1/N.  Two layouts are accepted: a single offset (t = 1, valid for
    any m) or the full layout with t = t_rule(m) offsets per side.
    """

    m: int
    N: int
    etas: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "etas", tuple(_as_fraction(e) for e in self.etas))
        if self.m < 2:
            raise ValueError("m must be >= 2")
        t = len(self.etas)
        if t == 0:
            raise ValueError("at least one boundary offset is required")
        if t != 1 and t != t_rule(self.m):
            raise ValueError(
                f"offset count must be 1 or t_rule(m)={t_rule(self.m)} for m={self.m}"
            )
        if self.N < 2 * t:
            raise ValueError("N must be >= 2 * t")
        if self.etas[0] < 0:
            raise ValueError("eta_0 must be >= 0")
        for a, b in zip(self.etas, self.etas[1:]):
            if not a < b:
                raise ValueError("offsets must be strictly increasing")
        if not self.etas[-1] < t:
            raise ValueError("largest offset must be < t to keep nodes ordered")

    @property
    def t(self) -> int:
        return len(self.etas)

    @property
    def h(self) -> Fraction:
        return Fraction(1, self.N)

    def nodes(self) -> tuple[Fraction, ...]:
        """All N+1 node positions as exact rationals, strictly increasing."""
        h = self.h
        t = self.t
        left = [e * h for e in self.etas]
        mid = [b * h for b in range(t, self.N - t + 1)]
        right = [1 - e * h for e in reversed(self.etas)]
        return tuple(left + mid + right)


@dataclass(frozen=True)
class SolveResult:
    """Solution of a coefficient system: decay parameters, boundary weights."""

    d: tuple
    boundary_c: tuple
    residual: object


@dataclass
class OptimalFormula:
    """Fully assembled quadrature rule.

    ``norm`` and ``norm_squared`` stay None until the error-norm module
    fills them in.
    """

    spec: QuadratureSpec
    nodes: tuple
    coefficients: tuple
    d: tuple
    boundary_c: tuple
    roots: RootSet
    prec: PrecisionConfig
    solve_residual: object
    norm: Optional[object] = None
    norm_squared: Optional[object] = None


def _lift(fr: Fraction):
    return mpf(fr.numerator) / fr.denominator


def _lift_bernoulli(n: int):
    b = bernoulli(n)
    return mpf(b.numerator) / b.denominator


def build_d_system_t1(m: int, N: int, eta0, roots: RootSet, working_bits: int = 256):
    """Dense system for the decay parameters in the single-offset layout.

    Row j (j = 1..m-1) couples the root powers through
    sum_i (-q^2 + (-1)^i q^(N-1+i)) / (q-1)^(i+1) * D^i 0^j plus the
    boundary term (q - q^N)(1-eta0)^j / (q-1); the right side is
    (1 - B_{j+1})/(j+1) - (1-eta0)^j / 2.
    """
    eta0 = _as_fraction(eta0)
    if not 0 <= eta0 < 1:
        raise ValueError("eta0 must satisfy 0 <= eta0 < 1")
    if m < 2:
        raise ValueError("m must be >= 2")
    if N < 2:
        raise ValueError("N must be >= 2")
    n = m - 1
    with workprec(working_bits):
        e = _lift(eta0)
        matrix = [[mpf(0)] * n for _ in range(n)]
        rhs = [mpf(0)] * n
        for j in range(1, m):
            row = matrix[j - 1]
            for k, q in enumerate(roots):
                s = mpf(0)
                for i in range(1, j + 1):
                    d0 = fwd_diff_zero(i, j)
                    if d0:
                        s += (-(q**2) + (-1) ** i * q ** (N - 1 + i)) / (q - 1) ** (
                            i + 1
                        ) * d0
                s += (q - q**N) * (1 - e) ** j / (q - 1)
                row[k] = s
            rhs[j - 1] = (1 - _lift_bernoulli(j + 1)) / (j + 1) - (1 - e) ** j / 2
    return matrix, rhs


def build_general_system(spec: QuadratureSpec, roots: RootSet, working_bits: int = 256):
    """Coupled system for the full boundary-layer layout.

    Unknown order is (d_1..d_{m-1}, C_0..C_{t-1}).  The first m-1 rows are
    the decay-parameter equations with the boundary-weight terms moved to
    the left side; the remaining t rows are the boundary moment equations
    for even powers (0, 2, ...), with the d_k terms moved to the left side.
    """
    m, N, t = spec.m, spec.N, spec.t
    nd = m - 1
    size = nd + t
    with workprec(working_bits):
        h = mpf(1) / N
        etas = [_lift(e) for e in spec.etas]
        matrix = [[mpf(0)] * size for _ in range(size)]
        rhs = [mpf(0)] * size
        for j in range(1, m):
            row = matrix[j - 1]
            for k, q in enumerate(roots):
                s = mpf(0)
                for i in range(1, j + 1):
                    d0 = fwd_diff_zero(i, j)
                    if d0:
                        s += (-(q ** (t + 1)) + (-1) ** i * q ** (N - t + i)) / (
                            q - 1
                        ) ** (i + 1) * d0
                row[k] = s
            for b in range(t):
                row[nd + b] = (t - etas[b]) ** j / h
            rhs[j - 1] = (mpf(t) ** (j + 1) - _lift_bernoulli(j + 1)) / (j + 1)
        alphas = range(0, m - 1, 2) if m % 2 == 0 else range(0, m, 2)
        for ai, alpha in enumerate(alphas):
            row = matrix[nd + ai]
            for k, q in enumerate(roots):
                s = mpf(0)
                for i in range(alpha + 1):
                    dt = fwd_diff_at(i, t, alpha)
                    if dt:
                        s += ((-1) ** i * q ** (t + i) - q ** (N - t + 1)) / (q - 1) ** (
                            i + 1
                        ) * int(dt)
                row[k] = -h * s
            for b in range(t):
                row[nd + b] = etas[b] ** alpha if alpha else mpf(1)
            tail = mpf(1) / 2 if alpha == 0 else mpf(0)
            rhs[nd + ai] = h * (sum(mpf(b) ** alpha for b in range(1, t)) + tail)
    return matrix, rhs


def solve_dense(matrix: Sequence[Sequence], rhs: Sequence, working_bits: int = 256):
    """Solve a square dense system by LU with partial pivoting.

    Returns (solution, residual) where residual = max |A x - b| recomputed
    at working precision.  Raises SingularSystem when a pivot vanishes.
    """
    n = len(rhs)
    with workprec(working_bits):
        A = mpmath.matrix(n, n)
        for i in range(n):
            if len(matrix[i]) != n:
                raise ValueError("matrix must be square")
            for j in range(n):
                A[i, j] = matrix[i][j]
        b = mpmath.matrix(list(rhs))
        try:
            x = mpmath.lu_solve(A, b)
        except ZeroDivisionError as exc:
            raise SingularSystem(str(exc)) from None
        res = A * x - b
        residual = max((abs(res[i]) for i in range(n)), default=mpf(0))
        return [x[i] for i in range(n)], residual


def assemble_coefficients(
    spec: QuadratureSpec,
    d: Sequence,
    boundary_c: Sequence,
    roots: RootSet,
    prec: PrecisionConfig | None = None,
    solve_residual=None,
) -> OptimalFormula:
    """Build the full coefficient vector from decay and boundary parameters.

    Interior weights follow C_b = h (1 + sum_k d_k (q_k^b + q_k^(N-b)));
    boundary weights are mirrored, C_{N-b} = C_b.
    """
    prec = prec or PrecisionConfig()
    m, N, t = spec.m, spec.N, spec.t
    if len(boundary_c) != t:
        raise ValueError("boundary weight count must equal t")
    with workprec(prec.working_bits):
        h = mpf(1) / N
        # q^b tables by running products keep the assembly O(N m)
        powers = []
        for q in roots:
            tab = [mpf(1)] * (N + 1)
            for b in range(1, N + 1):
                tab[b] = tab[b - 1] * q
            powers.append(tab)
        coeffs = list(boundary_c)
        for b in range(t, N - t + 1):
            s = mpf(1)
            for dk, tab in zip(d, powers):
                s += dk * (tab[b] + tab[N - b])
            coeffs.append(h * s)
        coeffs.extend(reversed(coeffs[:t]))
        nodes = tuple(_lift(x) for x in spec.nodes())
    return OptimalFormula(
        spec=spec,
        nodes=nodes,
        coefficients=tuple(coeffs),
        d=tuple(d),
        boundary_c=tuple(boundary_c),
        roots=roots,
        prec=prec,
        solve_residual=solve_residual,
    )


def moment_residuals(formula: OptimalFormula, working_bits: int | None = None):
    """Residuals of sum_b C_b x_b^alpha = 1/(alpha+1), alpha = 0..m-1."""
    bits = working_bits or formula.prec.working_bits
    out = []
    with workprec(bits):
        xs = [_lift(x) for x in formula.spec.nodes()]
        for alpha in range(formula.spec.m):
            s = mpf(0)
            for c, x in zip(formula.coefficients, xs):
                s += c * (x**alpha if alpha else mpf(1))
            out.append(abs(s - mpf(1) / (alpha + 1)))
    return out


def _solve_once(spec: QuadratureSpec, prec: PrecisionConfig) -> OptimalFormula:
    bits = prec.working_bits
    roots = unit_disk_roots(spec.m, prec)
    if spec.t == 1:
        matrix, rhs = build_d_system_t1(spec.m, spec.N, spec.etas[0], roots, bits)
        d, residual = solve_dense(matrix, rhs, bits)
        with workprec(bits):
            h = mpf(1) / spec.N
            c0 = mpf(1) / 2
            for dk, q in zip(d, roots):
                c0 += dk * (q - q**spec.N) / (q - 1)
            boundary = [h * c0]
    else:
        matrix, rhs = build_general_system(spec, roots, bits)
        sol, residual = solve_dense(matrix, rhs, bits)
        d, boundary = sol[: spec.m - 1], sol[spec.m - 1 :]
    result = SolveResult(d=tuple(d), boundary_c=tuple(boundary), residual=residual)
    return assemble_coefficients(
        spec, result.d, result.boundary_c, roots, prec, result.residual
    )


def optimal_formula(
    spec: QuadratureSpec,
    prec: PrecisionConfig | None = None,
    moment_tolerance=None,
    max_retries: int = 2,
) -> OptimalFormula:
    """End-to-end pipeline: roots -> system -> solve -> assembled formula.

    After solving, the moment conditions are re-checked at working
    precision; if the worst residual exceeds the tolerance the whole solve
    is retried with doubled precision, up to ``max_retries`` times, after
    which PrecisionExhausted is raised.  The default tolerance is
    10^-(decimal_digits/2) of the configured precision.
    """
    prec = prec or PrecisionConfig()
    bits = prec.working_bits
    for attempt in range(max_retries + 1):
        if attempt == 0:
            cfg = prec
        else:
            cfg = PrecisionConfig(
                working_bits=bits,
                refine_tolerance=Fraction(1, 2 ** (bits - 56)),
            )
        formula = _solve_once(spec, cfg)
        with workprec(cfg.working_bits):
            tol = (
                mpf(10) ** (-(cfg.decimal_digits // 2))
                if moment_tolerance is None
                else mpf(moment_tolerance)
            )
            worst = max(moment_residuals(formula))
        if worst <= tol:
            return formula
        bits *= 2
    raise PrecisionExhausted(
        f"moment residual {mpmath.nstr(worst, 5)} above tolerance after retries"
    )
