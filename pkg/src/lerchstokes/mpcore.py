"""Arbitrary-precision complex arithmetic context and classical special functions.

Everything downstream funnels its arithmetic through a PrecisionContext, which
fixes the number of trustworthy decimal digits plus internal guard digits.  The
special functions here are thin, contract-checked wrappers around mpmath; all
of them are pure and safe to call concurrently.

Branch convention used throughout the package: z**w = exp(w*log(z)) with
arg(log z) in (-pi, pi].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath as mp

from .errors import ConvergenceError, DomainError, PoleError

# Values are mpmath numbers; CNum is the complex flavour.
CNum = mp.mpc
Real = Union[int, float, str, Fraction, mp.mpf]
ComplexLike = Union[int, float, complex, str, Fraction, mp.mpf, mp.mpc]


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision: results are trustworthy to `digits` decimal digits,
    with `guard` extra digits carried internally."""

    digits: int = 50
    guard: int = 10

    def __post_init__(self):
        if self.digits < 15:
            raise DomainError(f"digits must be >= 15, got {self.digits}")
        if self.guard < 0:
            raise DomainError(f"guard must be >= 0, got {self.guard}")

    @property
    def dps(self) -> int:
        return self.digits + self.guard

    def workdps(self):
        """Context manager setting mpmath's precision to digits+guard."""
        return mp.workdps(self.dps)

    @property
    def tol(self) -> mp.mpf:
        """Absolute tolerance at the trustworthy-digit level."""
        with self.workdps():
            return mp.mpf(10) ** (-self.digits)


def to_mpf(x: Real, ctx: PrecisionContext) -> mp.mpf:
    """Convert an exact-ish real input (int, str, Fraction, ...) at full
    working precision.  Plain floats are accepted but carry only 53 bits."""
    with ctx.workdps():
        if isinstance(x, Fraction):
            return mp.mpf(x.numerator) / x.denominator
        if isinstance(x, str) and "/" in x:
            f = Fraction(x)
            return mp.mpf(f.numerator) / f.denominator
        return mp.mpf(x)


def to_mpc(x: ComplexLike, ctx: PrecisionContext) -> mp.mpc:
    with ctx.workdps():
        if isinstance(x, (Fraction, str)):
            return mp.mpc(to_mpf(x, ctx))
        return mp.mpc(x)


def _check_finite(value, what: str):
    if not mp.isfinite(value):
        raise ConvergenceError(f"{what} produced a non-finite value: {value}")
    return value


def _is_nonpositive_int(z) -> bool:
    z = mp.mpc(z)
    return z.imag == 0 and z.real == mp.floor(z.real) and z.real <= 0


def gamma(z: ComplexLike, ctx: PrecisionContext) -> CNum:
    """Gamma function, accurate to ctx.digits relative."""
    with ctx.workdps():
        z = mp.mpc(z)
        if _is_nonpositive_int(z):
            raise PoleError(f"gamma pole at z={z}")
        return _check_finite(mp.gamma(z), "gamma")


def erf(z: ComplexLike, ctx: PrecisionContext) -> CNum:
    """Error function (entire); real input gives a real-valued mpc."""
    with ctx.workdps():
        z = mp.mpc(z)
        return _check_finite(mp.erf(z), "erf")


def upper_incomplete_gamma(alpha: ComplexLike, z: ComplexLike,
                           ctx: PrecisionContext) -> CNum:
    """Gamma(alpha, z) on the principal branch, |arg z| <= pi.

    Remains accurate in the optimal-truncation regime |alpha| ~ |z| with
    Re(alpha) large and negative.
    """
    with ctx.workdps():
        alpha = mp.mpc(alpha)
        z = mp.mpc(z)
        if z == 0:
            if mp.re(alpha) <= 0:
                raise DomainError(
                    "Gamma(alpha, 0) diverges for Re(alpha) <= 0")
            return _check_finite(mp.gamma(alpha), "upper_incomplete_gamma")
        return _check_finite(mp.gammainc(alpha, z, mp.inf),
                             "upper_incomplete_gamma")


def hurwitz_zeta(s: ComplexLike, w: ComplexLike, ctx: PrecisionContext) -> CNum:
    """Hurwitz zeta zeta(s, w) for Re(w) > 0, s != 1."""
    with ctx.workdps():
        s = mp.mpc(s)
        w = mp.mpc(w)
        if s == 1:
            raise PoleError("hurwitz_zeta pole at s=1")
        if mp.re(w) <= 0:
            raise DomainError(f"hurwitz_zeta requires Re(w) > 0, got w={w}")
        return _check_finite(mp.zeta(s, w), "hurwitz_zeta")
