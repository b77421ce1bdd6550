"""Exact integer/rational combinatorics used throughout the package.

Everything here is computed in exact arithmetic (Python ints and
``fractions.Fraction``); no floating point enters this module.  Downstream
high-precision code lifts these exact values to multiprecision reals at the
last possible moment.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "EFPolynomial",
    "bernoulli",
    "euler_frobenius",
    "fwd_diff_at",
    "fwd_diff_zero",
    "geometric_power_sum",
    "power_sum",
]


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the convention B_1 = -1/2.

    Computed from the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 (n >= 1),
    B_0 = 1.  B_n = 0 for odd n >= 3.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n % 2 == 1 and n > 1:
        return Fraction(0)
    s = Fraction(0)
    for j in range(n):
        bj = bernoulli(j)
        if bj:
            s += comb(n + 1, j) * bj
    return -s / (n + 1)


@lru_cache(maxsize=None)
def fwd_diff_zero(i: int, k: int) -> int:
    """Forward difference of the k-th power at zero.

    fwd_diff_zero(i, k) = sum_{l=0}^{i} (-1)^(i-l) C(i, l) l^k with the
    convention 0^0 = 1.  Equals 0 for i > k >= 1 and i! for i = k.
    """
    if i < 0 or k < 0:
        raise ValueError("arguments must be >= 0")
    s = 0
    for l in range(i + 1):
        term = comb(i, l) * (1 if (l == 0 and k == 0) else l**k)
        s += term if (i - l) % 2 == 0 else -term
    return s


def fwd_diff_at(i: int, base, k: int) -> Fraction:
    """Forward difference of the k-th power evaluated at an arbitrary base.

    Expands via the binomial identity
    D^i g^k|_{g=base} = sum_{p=0}^{k} C(k, p) D^i 0^p base^(k-p),
    consistent with :func:`fwd_diff_zero` at base = 0.
    """
    if i < 0 or k < 0:
        raise ValueError("arguments must be >= 0")
    base = Fraction(base)
    s = Fraction(0)
    for p in range(k + 1):
        d = fwd_diff_zero(i, p)
        if d:
            s += comb(k, p) * d * (base ** (k - p) if k != p else 1)
    return s


@dataclass(frozen=True)
class EFPolynomial:
    """Euler-Frobenius polynomial with exact integer coefficients.

    ``coefficients`` are in ascending power order and satisfy the
    reciprocity symmetry coeff[i] == coeff[degree - i]; all entries are
    strictly positive and the polynomial is monic for degree >= 1.
    """

    degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coefficients
        if len(c) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")
        if any(x <= 0 for x in c):
            raise ValueError("coefficients must be strictly positive")
        if c != tuple(reversed(c)):
            raise ValueError("coefficient list must be palindromic")
        if self.degree >= 1 and (c[0] != 1 or c[-1] != 1):
            raise ValueError("polynomial must be monic with unit constant term")

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction x, rounding for mpf x."""
        acc = x * 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative_coefficients(self) -> tuple[int, ...]:
        return tuple(i * c for i, c in enumerate(self.coefficients))[1:]


@lru_cache(maxsize=None)
def euler_frobenius(k: int) -> EFPolynomial:
    """Euler-Frobenius polynomial E_k via its finite-difference expansion.

    E_k(x) = sum_{i=0}^{k+1} D^i 0^(k+1) (x - 1)^(k+1-i); pure integer
    arithmetic, no symbolic differentiation.  E_0 = 1.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    coeffs = [0] * (k + 2)
    for i in range(k + 2):
        d = fwd_diff_zero(i, k + 1)
        if d == 0:
            continue
        p = k + 1 - i
        for j in range(p + 1):
            coeffs[j] += d * comb(p, j) * (-1) ** (p - j)
    if coeffs[k + 1] != 0:
        raise AssertionError("degree reduction failed")
    return EFPolynomial(degree=k, coefficients=tuple(coeffs[: k + 1]))


def power_sum(upper: int, k: int) -> Fraction:
    """sum_{g=0}^{upper-1} g^k through the Bernoulli expansion.

    The empty sum (upper = 0) is 0.  The expansion is
    sum = sum_{j=1}^{k+1} k! B_(k+1-j) / (j! (k+1-j)!) upper^j.
    """
    if upper < 0:
        raise ValueError("upper must be >= 0")
    s = Fraction(0)
    fk = factorial(k)
    for j in range(1, k + 2):
        b = bernoulli(k + 1 - j)
        if b:
            s += Fraction(fk, factorial(j) * factorial(k + 1 - j)) * b * upper**j
    return s


def geometric_power_sum(q, n: int, k: int) -> Fraction:
    """Closed form of sum_{g=0}^{n-1} q^g g^k for rational q != 1.

    Uses the finite-difference representation
    (1/(1-q)) sum_i (q/(1-q))^i D^i 0^k
      - (q^n/(1-q)) sum_i (q/(1-q))^i D^i g^k|_{g=n}.
    Exact over Fractions.  q = 1 is rejected (the plain power sum covers it).
    """
    q = Fraction(q)
    if q == 1:
        raise ValueError("q = 1 is outside the domain of the closed form")
    if n < 0:
        raise ValueError("n must be >= 0")
    r = q / (1 - q)
    s1 = Fraction(0)
    s2 = Fraction(0)
    for i in range(k + 1):
        w = r**i
        d0 = fwd_diff_zero(i, k)
        if d0:
            s1 += w * d0
        dn = fwd_diff_at(i, n, k)
        if dn:
            s2 += w * dn
    return s1 / (1 - q) - q**n / (1 - q) * s2
