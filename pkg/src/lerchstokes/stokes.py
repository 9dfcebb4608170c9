"""Stokes multiplier extraction across arg a = +/- pi/2.

The n-th multiplier is obtained by peeling the algebraic blocks and the
larger subdominant exponentials off the oracle value of Z and normalizing
by the n-th exponential.  The error-function law gives the predicted
transition profile, with unequal scales (n+lam') above and (n+lam) below
the real axis.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import List, Optional, Sequence

import mpmath as mp

from .errors import DomainError, PrecisionError
from .expansion import TruncationSchedule, h_block, remainder_terms
from .mpcore import CNum, PrecisionContext, Real, to_mpf
from .oracle import LerchParams, lerch_reference, z_from_lerch

#: cancellation guard: result must keep at least this many trustworthy digits
GUARD_DIGITS = 10


def stokes_multiplier(n: int, p: LerchParams, sch: TruncationSchedule,
                      ctx: PrecisionContext) -> CNum:
    """S_n(theta) for theta = arg a; the sign of theta selects the upper or
    lower hemisphere subtraction.

    Note the normalizing prefactor carries (n+xi)^(1-s): that is what the
    defining decomposition requires for S_n to be the coefficient of the
    n-th exponential (the displayed extraction formulas invert this power).
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n > sch.m_max:
        raise DomainError(f"n={n} needs schedule entries up to m={n}")
    with ctx.workdps():
        theta = p.theta
        if theta == 0:
            raise DomainError("theta=0 is not in either transition hemisphere")
        a, s = p.a, p.s
        L = lerch_reference(p, ctx)
        zn = z_from_lerch(p, L, ctx) / (2 * mp.pi) ** s
        brace = zn
        max_mag = abs(zn)
        for m in range(n + 1):
            h = 1j / (2 * mp.pi) * h_block(m, p, sch, ctx)
            brace -= h
            max_mag = max(max_mag, abs(h))
        upper = theta > 0
        n_primed = n - 1 if upper else n
        n_unprimed = n if upper else n - 1
        for m in range(max(n_primed, n_unprimed) + 1):
            r_m, rp_m = remainder_terms(m, p, sch, ctx)
            if m <= n_primed and rp_m is not None:
                t = mp.expjpi(s / 2) * rp_m / (m + p.lam_prime) ** (1 - s)
                brace -= t
                max_mag = max(max_mag, abs(t))
            if m <= n_unprimed:
                t = mp.expjpi(-s / 2) * r_m / (m + p.lam) ** (1 - s)
                brace += t
                max_mag = max(max_mag, abs(t))
        floor = mp.mpf(10) ** (-(ctx.digits - GUARD_DIGITS)) * max_mag
        if abs(brace) < floor:
            raise PrecisionError(
                f"subtraction cancelled below 10^-(digits-{GUARD_DIGITS}) of the "
                f"largest intermediate ({mp.nstr(max_mag, 5)}); raise ctx.digits")
        if upper:
            xi = p.lam_prime
            pref = (mp.exp(-2j * mp.pi * (n + xi) * a + 1j * mp.pi * s / 2)
                    * (n + xi) ** (1 - s))
        else:
            xi = p.lam
            pref = (mp.exp(2j * mp.pi * (n + xi) * a - 1j * mp.pi * s / 2)
                    * (n + xi) ** (1 - s))
        return pref * brace


def stokes_erf_approx(n: int, theta: Real, a_mod: Real, lam: Real) -> float:
    """Error-function transition law 1/2 +/- 1/2 erf[(theta -/+ pi/2)
    sqrt(pi (n+xi) |a|)], xi = lam' above the real axis and lam below."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    with mp.workdps(30):
        ctx30 = PrecisionContext(digits=20, guard=10)
        theta = to_mpf(theta, ctx30)
        a_mod = to_mpf(a_mod, ctx30)
        lam = to_mpf(lam, ctx30)
        if theta == 0:
            raise DomainError("theta=0 is not in either transition hemisphere")
        if theta > 0:
            xi = 1 - lam
            val = mp.mpf(1) / 2 + mp.erf(
                (theta - mp.pi / 2) * mp.sqrt(mp.pi * (n + xi) * a_mod)) / 2
        else:
            xi = lam
            val = mp.mpf(1) / 2 - mp.erf(
                (theta + mp.pi / 2) * mp.sqrt(mp.pi * (n + xi) * a_mod)) / 2
        return float(val)


@dataclass
class StokesSample:
    """One table row: multiplier, erf approximation and hemisphere."""

    n: int
    theta: mp.mpf
    S: Optional[CNum]
    approx: Optional[float]
    side: str
    error: Optional[str] = None

    def __post_init__(self):
        if self.side not in ("upper", "lower"):
            raise ValueError(f"side must be upper|lower, got {self.side}")

    def row(self, digits: int) -> dict:
        return {
            "theta_over_pi": mp.nstr(self.theta / mp.pi, 12),
            "re_S": None if self.S is None else mp.nstr(mp.re(self.S), digits),
            "im_S": None if self.S is None else mp.nstr(mp.im(self.S), digits),
            "approx": None if self.approx is None else repr(self.approx),
            "side": self.side,
            "n": self.n,
            "error": self.error,
        }


def stokes_table(n: int, template: LerchParams, theta_grid: Sequence[Real],
                 sch: TruncationSchedule,
                 ctx: PrecisionContext) -> List[StokesSample]:
    """Sweep theta over the grid (radians) at fixed lam, |a|, s.  A failed
    row carries its error message instead of being dropped."""
    with ctx.workdps():
        a_mod = abs(template.a)
        grid = sorted(to_mpf(t, ctx) for t in theta_grid)
        samples: List[StokesSample] = []
        for theta in grid:
            if not 0 < abs(theta) < mp.pi:
                raise DomainError(
                    f"grid theta must lie in (-pi, pi) excluding 0, got {theta}")
            side = "upper" if theta > 0 else "lower"
            p = LerchParams(lam=template.lam,
                            a=a_mod * mp.exp(1j * theta),
                            s=template.s)
            approx = stokes_erf_approx(n, theta, a_mod, template.lam)
            try:
                s_val = stokes_multiplier(n, p, sch, ctx)
                samples.append(StokesSample(n=n, theta=theta, S=s_val,
                                            approx=approx, side=side))
            except Exception as exc:  # reported per-row, never dropped
                samples.append(StokesSample(n=n, theta=theta, S=None,
                                            approx=approx, side=side,
                                            error=f"{type(exc).__name__}: {exc}"))
        return samples


CSV_COLUMNS = ["theta_over_pi", "re_S", "im_S", "approx", "side", "n"]


def samples_to_csv(samples: Sequence[StokesSample], digits: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for s in samples:
        r = s.row(digits)
        writer.writerow([r[c] if r[c] is not None else "" for c in CSV_COLUMNS])
    return buf.getvalue()


def samples_to_json(samples: Sequence[StokesSample], digits: int) -> str:
    return json.dumps([s.row(digits) for s in samples], indent=2)
