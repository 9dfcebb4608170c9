"""Exact coefficient machinery for the algebraic expansion.

Stirling numbers of the second kind and the palindromic integer polynomials
feeding the closed form of the periodic zeta function at non-positive integer
arguments.  Everything here is exact integer / rational arithmetic; the only
floating point happens at the final complex evaluation step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import mpmath as mp

from .errors import DomainError
from .mpcore import CNum, PrecisionContext, Real, to_mpf


class Stirling2Table:
    """Triangular table of Stirling numbers of the second kind S(n, r),
    grown on demand via S(n, r) = r*S(n-1, r) + S(n-1, r-1)."""

    def __init__(self):
        self._rows = [[1]]  # row n=1: S(1,1)=1

    def value(self, n: int, r: int) -> int:
        if r < 1 or r > n:
            raise DomainError(f"stirling2 requires 1 <= r <= n, got ({n},{r})")
        while len(self._rows) < n:
            prev = self._rows[-1]
            m = len(self._rows) + 1
            row = []
            for j in range(1, m + 1):
                v = 0
                if j <= m - 1:
                    v += j * prev[j - 1]
                if j >= 2 and j - 2 < len(prev):
                    v += prev[j - 2]
                row.append(v)
            self._rows.append(row)
        return self._rows[n - 1][r - 1]


_TABLE = Stirling2Table()


def stirling2(n: int, r: int) -> int:
    """Stirling number of the second kind, exact."""
    return _TABLE.value(n, r)


@dataclass(frozen=True)
class PPoly:
    """Integer polynomial of degree n-2 with palindromic coefficients
    c_0..c_{n-2}; empty for n=1 where the polynomial is identically 1."""

    n: int
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"PPoly requires n >= 1, got {self.n}")
        c = self.coefficients
        if self.n == 1:
            if c:
                raise ValueError("PPoly n=1 must have empty coefficients")
            return
        if len(c) != self.n - 1:
            raise ValueError(
                f"PPoly n={self.n} needs {self.n - 1} coefficients, got {len(c)}")
        if c != tuple(reversed(c)):
            raise ValueError(f"PPoly coefficients not palindromic: {c}")
        if c[0] != 1:
            raise ValueError(f"PPoly leading coefficient must be 1, got {c[0]}")

    def evaluate(self, x) -> CNum:
        if self.n == 1:
            return mp.mpc(1)
        acc = mp.mpc(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def p_poly(n: int) -> PPoly:
    """Expand sum_{r=1}^{n-1} r! * S(n-1, r) * x^(r-1) * (1-x)^(n-r-1) into
    exact integer coefficients."""
    if n < 1:
        raise DomainError(f"p_poly requires n >= 1, got {n}")
    if n == 1:
        return PPoly(1, ())
    acc = [0] * (n - 1)
    rfact = 1
    for r in range(1, n):
        rfact *= r
        term = [0] * (r - 1) + [rfact * stirling2(n - 1, r)]  # coeff * x^(r-1)
        term = _poly_mul(term, _poly_pow_one_minus_x(n - r - 1))
        for i, c in enumerate(term):
            if i < len(acc):
                acc[i] += c
    return PPoly(n, tuple(acc))


def _poly_pow_one_minus_x(k: int):
    """(1-x)^k as an integer coefficient list."""
    out = [1]
    for _ in range(k):
        out = _poly_mul(out, [1, -1])
    return out


def periodic_zeta_neg(lam: Real, k: int, ctx: PrecisionContext) -> CNum:
    """F(lam, -k) for 0 < lam < 1 via the closed polynomial form
    e^{2 pi i lam} P_{k+1}(x) / (1-x)^{k+1} with x = e^{2 pi i lam}."""
    if k < 0:
        raise DomainError(f"periodic_zeta_neg requires k >= 0, got {k}")
    with ctx.workdps():
        lam = to_mpf(lam, ctx)
        if not 0 < lam < 1:
            raise DomainError(
                f"periodic_zeta_neg requires 0 < lam < 1 (use zeta_neg_int for "
                f"lam=1), got {lam}")
        x = mp.expjpi(2 * lam)
        p = p_poly(k + 1)
        return x * p.evaluate(x) / (1 - x) ** (k + 1)


def zeta_neg_int(k: int) -> Fraction:
    """Riemann zeta at -k for integer k >= 0, exact: the lam=1 bypass of the
    closed form (whose x=1 pole is removable only in the limit)."""
    if k < 0:
        raise DomainError(f"zeta_neg_int requires k >= 0, got {k}")
    if k == 0:
        return Fraction(-1, 2)
    if k % 2 == 0:
        return Fraction(0)
    m = (k + 1) // 2  # k = 2m-1, zeta(1-2m) = -B_{2m}/(2m)
    p, q = mp.bernfrac(2 * m)
    return Fraction(-int(p), int(q) * 2 * m)
