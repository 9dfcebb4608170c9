"""Independent high-precision reference values for the Lerch zeta function.

Two deliberately different evaluation routes are provided:

* `lerch_reference` integrates the Mellin-type representation
  L = (1/Gamma(s)) * int_0^{inf e^{i phi}} t^{s-1} e^{-a t} / (1 - w e^{-t}) dt,
  w = e^{2 pi i lam}, along a rotated ray chosen so Re(a t) grows.

* `lerch_direct_sum` sums the defining series head-on and closes the tail
  analytically: repeated Abel summation by parts for lam < 1 (which also
  continues the series to Re(s) <= 0), Euler-Maclaurin for lam = 1.

Agreement between the two is the ground truth the expansion machinery is
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath as mp

from .errors import ConvergenceError, DomainError, PoleError
from .mpcore import (CNum, ComplexLike, PrecisionContext, Real, to_mpc, to_mpf)

#: contour clamp keeping the rotated ray away from the integrand's poles
CONTOUR_DELTA = "0.1"


@dataclass(frozen=True)
class LerchParams:
    """The parameter triple (lam, a, s) with lam in (0, 1], |arg a| < pi."""

    lam: mp.mpf
    a: mp.mpc
    s: mp.mpc

    def __post_init__(self):
        if not 0 < self.lam <= 1:
            raise DomainError(f"lam must lie in (0, 1], got {self.lam}")
        if self.a == 0 or (mp.im(self.a) == 0 and mp.re(self.a) <= 0):
            raise DomainError(f"a must satisfy |arg a| < pi, a != 0, got {self.a}")

    @classmethod
    def from_polar(cls, lam: Real, a_mod: Real, theta_over_pi: Real,
                   s: ComplexLike, ctx: PrecisionContext) -> "LerchParams":
        """Build from decimal-string / fraction inputs at full working
        precision, with theta given in units of pi."""
        with ctx.workdps():
            lam_v = to_mpf(lam, ctx)
            r = to_mpf(a_mod, ctx)
            tp = to_mpf(theta_over_pi, ctx)
            if r <= 0:
                raise DomainError(f"a_mod must be positive, got {r}")
            if not abs(tp) < 1:
                raise DomainError(f"|theta/pi| must be < 1, got {tp}")
            a = r * mp.expjpi(tp)
            return cls(lam=lam_v, a=a, s=to_mpc(s, ctx))

    @property
    def lam_prime(self) -> mp.mpf:
        return 1 - self.lam

    @property
    def theta(self) -> mp.mpf:
        return mp.arg(self.a)

    @property
    def eps(self) -> int:
        """1 for lam=1 (Hurwitz case, extra pole at u=1), else 0."""
        return 1 if self.lam == 1 else 0


def lerch_reference(p: LerchParams, ctx: PrecisionContext) -> CNum:
    """L(lam, a, s) by tanh-sinh quadrature of the integral representation
    along a rotated ray.  Absolute accuracy at the level of ctx.digits."""
    with ctx.workdps():
        s = p.s
        if p.lam == 1:
            if not mp.re(s) > 1:
                raise DomainError(
                    f"lerch_reference needs Re(s) > 1 for lam=1, got s={s}")
        elif not mp.re(s) > 0:
            raise DomainError(
                f"lerch_reference needs Re(s) > 0 for lam < 1, got s={s}")
        delta = mp.mpf(CONTOUR_DELTA)
        phi = -_clamp(p.theta, -mp.pi / 2 + delta, mp.pi / 2 - delta)
        return _contour_integral(p, phi, ctx)


def _clamp(x, lo, hi):
    return min(max(x, lo), hi)


def _contour_integral(p: LerchParams, phi, ctx: PrecisionContext) -> CNum:
    """Quadrature along arg t = phi, refining until two successive
    tanh-sinh levels agree to 10^-(digits+5)."""
    with ctx.workdps():
        w = mp.expjpi(2 * p.lam)
        rot = mp.exp(1j * phi)
        a, s = p.a, p.s

        def integrand(u):
            t = rot * u
            return rot * t ** (s - 1) * mp.exp(-a * t) / (1 - w * mp.exp(-t))

        target = mp.mpf(10) ** (-(ctx.digits + 5))
        for maxdegree in (8, 10, 12):
            val, err = mp.quad(integrand, [0, mp.inf], error=True,
                               maxdegree=maxdegree)
            if err < target * max(1, abs(val)):
                return val / mp.gamma(s)
        raise ConvergenceError(
            f"quadrature stalled at error {err} (target {target}) for {p}")


def lerch_direct_sum(p: LerchParams, ctx: PrecisionContext,
                     head: int | None = None) -> CNum:
    """Second oracle: head summation plus an analytically closed tail.

    For lam < 1 the tail sum_{n>=N} w^n f(n) is expanded by repeated
    summation by parts,

        sum_{n>=N} w^n f(n) = w^N sum_{j>=0} w^j/(1-w)^{j+1} * Delta^j f(N),

    which converges fast for f(n) = (n+a)^{-s} and also evaluates the Abel
    sum when Re(s) <= 0.  For lam = 1 an Euler-Maclaurin tail is used and
    Re(s) > 1 is required.
    """
    with ctx.workdps():
        a, s = p.a, p.s
        if p.lam == 1:
            if not mp.re(s) > 1:
                raise DomainError(
                    f"direct sum needs Re(s) > 1 for lam=1, got s={s}")
            return _hurwitz_direct(a, s, ctx, head)
        w = mp.expjpi(2 * p.lam)
        g = w / (1 - w)
        # the tail expansion needs head >> |g| * (number of difference orders)
        n_head = head or max(60, int(4 * abs(s)) + 20, int(2 * abs(a)) + 10,
                             int(mp.ceil(mp.mpf("1.5") * ctx.dps * abs(g))) + 20)
        total = mp.fsum(w ** n * (n + a) ** (-s) for n in range(n_head))
        tol = mp.mpf(10) ** (-(ctx.digits + 5))
        j_max = 8 * ctx.dps
        fv = [(n_head + i + a) ** (-s) for i in range(j_max + 1)]
        fac = w ** n_head / (1 - w)
        tail = mp.mpc(0)
        for j in range(j_max):
            term = fac * g ** j * fv[0]
            tail += term
            if j > 3 and abs(term) < tol * max(1, abs(total + tail)):
                return total + tail
            fv = [fv[i + 1] - fv[i] for i in range(len(fv) - 1)]
        raise ConvergenceError(f"Abel tail did not converge for {p}")


def _hurwitz_direct(a, s, ctx: PrecisionContext, head: int | None) -> CNum:
    """sum_{n>=0} (n+a)^{-s}: head plus Euler-Maclaurin tail with Bernoulli
    corrections added until below tolerance."""
    n_head = head or max(40, 2 * ctx.dps, int(2 * abs(a)) + 10)
    total = mp.fsum((n + a) ** (-s) for n in range(n_head))
    b = n_head + a
    tail = b ** (1 - s) / (s - 1) + b ** (-s) / 2
    tol = mp.mpf(10) ** (-(ctx.digits + 5))
    poch = s  # (s)_{2j-1} running product
    bpow = b ** (-s - 1)
    for j in range(1, 4 * ctx.dps):
        term = mp.bernoulli(2 * j) / mp.factorial(2 * j) * poch * bpow
        tail += term
        if abs(term) < tol * max(1, abs(total + tail)):
            return total + tail
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        bpow /= b * b
    raise ConvergenceError("Euler-Maclaurin tail did not converge")


def f_lambda_zero(lam: mp.mpf) -> CNum:
    """F(lam, 0): e^{2 pi i lam}/(1 - e^{2 pi i lam}) for lam < 1, -1/2 at
    lam = 1."""
    if lam == 1:
        return mp.mpc(-0.5)
    w = mp.expjpi(2 * lam)
    return w / (1 - w)


def z_from_lerch(p: LerchParams, L: CNum, ctx: PrecisionContext) -> CNum:
    """Peel the leading algebraic part off a Lerch value:
    Z = Gamma(s) * (L - eps*a^{1-s}/(s-1) - a^{-s}*(1 + F(lam, 0)))."""
    with ctx.workdps():
        a, s = p.a, p.s
        if p.lam == 1 and s == 1:
            raise PoleError("Z undefined at lam=1, s=1")
        lead = p.eps * a ** (1 - s) / (s - 1) + a ** (-s) * (1 + f_lambda_zero(p.lam))
        return mp.gamma(s) * (L - lead)


def periodic_zeta(lam: Real, s: ComplexLike, ctx: PrecisionContext) -> CNum:
    """F(lam, s) = e^{2 pi i lam} L(lam, 1, s), routed through the quadrature
    oracle when valid, otherwise through the Abel-continued direct sum."""
    with ctx.workdps():
        lam_v = to_mpf(lam, ctx)
        s_v = to_mpc(s, ctx)
        p = LerchParams(lam=lam_v, a=mp.mpc(1), s=s_v)
        need = 1 if lam_v == 1 else 0
        if mp.re(s_v) > need:
            L = lerch_reference(p, ctx)
        else:
            L = lerch_direct_sum(p, ctx)
        return mp.expjpi(2 * lam_v) * L
