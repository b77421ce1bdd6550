"""Isolation and high-precision refinement of Euler-Frobenius roots.

For smoothness order m >= 2 the polynomial E_{2m-2} has 2m-2 simple real
negative roots occurring in reciprocal pairs; exactly m-1 of them lie in
(-1, 0).  Those roots cluster geometrically towards 0 (the smallest is
around 1e-9 in magnitude already for m = 15), so isolation runs on a
graded dyadic grid: the interval (-1, 0) is covered by octaves
[-2^-j, -2^-(j+1)], each subdivided uniformly.  Grid signs are evaluated
in exact integer arithmetic, which makes bracketing rigorous; the final
polish is bisection-safeguarded Newton at the requested binary precision.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp, mpf, workprec

from .exact_math import EFPolynomial, euler_frobenius

__all__ = [
    "PrecisionConfig",
    "PrecisionExhausted",
    "RootCountMismatch",
    "RootSet",
    "unit_disk_roots",
]

_MAX_SPLIT_BITS = 16  # up to 2^16 subintervals per octave before giving up
_MAX_OCTAVES = 4096


class PrecisionExhausted(Exception):
    """Requested tolerance is unreachable at the configured precision."""


class RootCountMismatch(Exception):
    """Isolation did not find the expected number of roots in (-1, 0)."""


def _as_tolerance(value, working_bits: int) -> Fraction:
    if value is None:
        return Fraction(1, 2 ** (working_bits - 56))
    if isinstance(value, Fraction):
        tol = value
    elif isinstance(value, str):
        tol = Fraction(value)
    else:
        tol = Fraction(value)  # int, float, mpf all convert exactly
    if tol <= 0:
        raise ValueError("refine_tolerance must be positive")
    return tol


@dataclass(frozen=True)
class PrecisionConfig:
    """Binary working precision and target enclosure width for root polish.

    ``refine_tolerance`` accepts Fraction/str/float/int and defaults to
    2^-(working_bits - 56), i.e. 2^-200 at the default 256 bits.
    """

    working_bits: int = 256
    refine_tolerance: Fraction = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.working_bits < 64:
            raise ValueError("working_bits must be >= 64")
        object.__setattr__(
            self, "refine_tolerance", _as_tolerance(self.refine_tolerance, self.working_bits)
        )

    @property
    def decimal_digits(self) -> int:
        """Decimal digits representable at working_bits."""
        return int(self.working_bits * 0.30103)

    def tolerance_mpf(self):
        with workprec(self.working_bits):
            return mpf(self.refine_tolerance.numerator) / self.refine_tolerance.denominator


@dataclass(frozen=True)
class RootSet:
    """The m-1 refined roots of E_{2m-2} inside the unit disk, ascending."""

    m: int
    roots: tuple
    certified_width: object
    polynomial: EFPolynomial

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def _sign_at_dyadic(coeffs: tuple[int, ...], num: int, lbits: int) -> int:
    """Exact sign of P(num / 2^lbits) for integer num (num may be negative)."""
    d = len(coeffs) - 1
    s = 0
    for i, c in enumerate(coeffs):
        s += c * num**i * (1 << (lbits * (d - i)))
    return (s > 0) - (s < 0)


def _isolate(coeffs: tuple[int, ...], want: int) -> list[tuple[Fraction, Fraction]]:
    """Brackets (a, b) in (-1, 0), each containing exactly one root.

    Endpoints are exact dyadic rationals with opposite exact signs of the
    polynomial.  The constant term of E_k is 1, so the sign at 0 is +1 and
    a trailing unmatched sign is detected by descending far enough.
    """
    for n_bits in range(3, _MAX_SPLIT_BITS + 1):
        brackets: list[tuple[Fraction, Fraction]] = []
        prev = Fraction(-1)
        sign_prev = _sign_at_dyadic(coeffs, -1, 0)
        if sign_prev == 0:
            raise RootCountMismatch("polynomial vanishes at -1")
        j = 0
        while j < _MAX_OCTAVES:
            # octave [-2^-j, -2^-(j+1)] split into 2^n_bits dyadic pieces
            lbits = j + 1 + n_bits
            top = 1 << (n_bits + 1)
            for i in range(1, (1 << n_bits) + 1):
                num = top - i
                x = Fraction(-num, 1 << lbits)
                sgn = _sign_at_dyadic(coeffs, -num, lbits)
                if sgn == 0:
                    raise RootCountMismatch("grid point is an exact root")
                if sgn * sign_prev < 0:
                    brackets.append((prev, x))
                prev, sign_prev = x, sgn
            if len(brackets) == want and sign_prev > 0:
                return brackets
            if len(brackets) > want:
                raise RootCountMismatch(
                    f"found {len(brackets)} sign changes, expected {want}"
                )
            j += 1
        if len(brackets) == want:
            return brackets
    raise RootCountMismatch(f"could not isolate {want} roots in (-1, 0)")


def _refine(poly: EFPolynomial, lo: Fraction, hi: Fraction, prec: PrecisionConfig):
    """Newton iteration safeguarded by the exact bracket, at working precision.

    Returns (root, half_width).  Raises PrecisionExhausted if the bracket
    stops shrinking above the requested tolerance.
    """
    dcoeffs = poly.derivative_coefficients()

    def ev(x):
        acc = mpf(0)
        for c in reversed(poly.coefficients):
            acc = acc * x + c
        return acc

    def evd(x):
        acc = mpf(0)
        for c in reversed(dcoeffs):
            acc = acc * x + c
        return acc

    with workprec(prec.working_bits):
        tol = prec.tolerance_mpf()
        a = mpf(lo.numerator) / lo.denominator
        b = mpf(hi.numerator) / hi.denominator
        fa = ev(a)
        x = (a + b) / 2
        while (b - a) / 2 > tol:
            fx = ev(x)
            if fx == 0:
                return x, (b - a) / 2
            if (fx > 0) == (fa > 0):
                a, fa = x, fx
            else:
                b = x
            if not a < b:
                raise PrecisionExhausted("bracket collapsed above tolerance")
            dfx = evd(x)
            nxt = x - fx / dfx if dfx != 0 else None
            if nxt is None or not a < nxt < b:
                nxt = (a + b) / 2
                if nxt <= a or nxt >= b:
                    raise PrecisionExhausted(
                        "no representable point between bracket endpoints"
                    )
            x = nxt
        return (a + b) / 2, (b - a) / 2


def unit_disk_roots(m: int, prec: PrecisionConfig | None = None) -> RootSet:
    """All m-1 roots of E_{2m-2} lying in (-1, 0), refined to tolerance.

    Raises PrecisionExhausted when the tolerance is below the resolution of
    the working precision, and RootCountMismatch if bracketing fails to
    account for exactly m-1 roots.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    prec = prec or PrecisionConfig()
    if prec.refine_tolerance < Fraction(1, 2**prec.working_bits):
        raise PrecisionExhausted(
            "refine_tolerance finer than representable spacing at working_bits"
        )
    poly = euler_frobenius(2 * m - 2)
    brackets = _isolate(poly.coefficients, m - 1)
    roots = []
    width = mpf(0)
    for lo, hi in brackets:
        r, w = _refine(poly, lo, hi, prec)
        roots.append(r)
        width = max(width, w)
    roots.sort()
    with workprec(prec.working_bits):
        for r in roots:
            if not (mpf(-1) < r < mpf(0)):
                raise RootCountMismatch("refined root escaped (-1, 0)")
    return RootSet(m=m, roots=tuple(roots), certified_width=width, polynomial=poly)
