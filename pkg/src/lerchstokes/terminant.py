"""The terminant function T_nu(z) and its uniform smoothing asymptotics.

T_nu(z) = e^{pi i nu} Gamma(nu)/(2 pi i) * Gamma(1-nu, z) on the principal
sheet |arg z| <= pi.  The argument is carried explicitly as (modulus, phase)
because the continuation distinguishes z e^{pi i} from z e^{-pi i}: beyond
|arg z| = pi the value is obtained from the connection formula

    T_nu(z e^{-pi i}) = e^{2 pi i nu} (T_nu(z e^{pi i}) - 1)

rearranged so that only principal-sheet evaluations are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .errors import DomainError, PoleError
from .mpcore import (CNum, ComplexLike, PrecisionContext, Real,
                     _is_nonpositive_int, to_mpc, to_mpf, upper_incomplete_gamma)

#: regime-selection margin for the leading-order asymptotic (diagnostics only)
ASYMPTOTIC_DELTA = "0.05"


@dataclass(frozen=True)
class ArgTrackedZ:
    """A nonzero complex number with explicit, unreduced phase in
    (-3 pi/2, 3 pi/2)."""

    modulus: mp.mpf
    phase: mp.mpf

    def __post_init__(self):
        if not self.modulus > 0:
            raise DomainError(f"modulus must be positive, got {self.modulus}")
        if not abs(self.phase) < 3 * mp.pi / 2:
            raise DomainError(
                f"|phase| must be < 3*pi/2, got {self.phase}")

    @classmethod
    def from_polar(cls, modulus: Real, phase: Real,
                   ctx: PrecisionContext) -> "ArgTrackedZ":
        with ctx.workdps():
            return cls(to_mpf(modulus, ctx), to_mpf(phase, ctx))

    def value(self) -> mp.mpc:
        """Complex value (phase information beyond (-pi, pi] collapses)."""
        return self.modulus * mp.exp(1j * self.phase)

    def shifted(self, dphase) -> "ArgTrackedZ":
        return ArgTrackedZ(self.modulus, self.phase + dphase)


def terminant(nu: ComplexLike, z: ArgTrackedZ, ctx: PrecisionContext) -> CNum:
    """T_nu(z) anywhere in |arg z| < 3*pi/2."""
    with ctx.workdps():
        nu = mp.mpc(nu)
        if _is_nonpositive_int(nu):
            raise PoleError(f"terminant pole at nu={nu}")
        if abs(z.phase) > mp.pi:
            return continue_past_pi(nu, z, ctx)
        val = upper_incomplete_gamma(1 - nu, z.value(), ctx)
        return mp.expjpi(nu) * mp.gamma(nu) / (2j * mp.pi) * val


def continue_past_pi(nu: ComplexLike, z: ArgTrackedZ,
                     ctx: PrecisionContext) -> CNum:
    """Continuation of T_nu onto pi < |arg z| < 3*pi/2 via the connection
    formula, evaluating only on the principal sheet."""
    with ctx.workdps():
        nu = mp.mpc(nu)
        if abs(z.phase) <= mp.pi:
            raise DomainError(
                f"phase {z.phase} is principal; evaluate terminant directly")
        if z.phase > mp.pi:
            # T(z e^{pi i}) = 1 + e^{-2 pi i nu} T(z e^{-pi i})
            principal = terminant(nu, z.shifted(-2 * mp.pi), ctx)
            return 1 + mp.expjpi(-2 * nu) * principal
        # T(z e^{-pi i}) = e^{2 pi i nu} (T(z e^{pi i}) - 1)
        principal = terminant(nu, z.shifted(2 * mp.pi), ctx)
        return mp.expjpi(2 * nu) * (principal - 1)


def c_of_phi(phi: Real, ctx: PrecisionContext) -> CNum:
    """The branch-correct root of (1/2) c^2 = 1 + i(phi-pi) - e^{i(phi-pi)},
    continuous with c(phi) ~ phi - pi near phi = pi.  Domain (0, 2 pi)."""
    with ctx.workdps():
        phi = to_mpf(phi, ctx)
        if not 0 < phi < 2 * mp.pi:
            raise DomainError(f"c_of_phi requires phi in (0, 2*pi), got {phi}")
        u = phi - mp.pi
        if u == 0:
            return mp.mpc(0)
        c = mp.sqrt(2 * (1 + 1j * u - mp.exp(1j * u)))
        # c/u -> 1 as u -> 0; pick the root on that branch
        if mp.re(c / u) < 0:
            c = -c
        return c


def terminant_asymptotic(nu: ComplexLike, z: ArgTrackedZ,
                         ctx: PrecisionContext) -> CNum:
    """Leading-order uniform approximation of T_nu(z) for |nu| ~ |z| >> 1.

    Saddle form away from arg z = pi, error-function smoothing form in a
    full neighbourhood of it.  Diagnostics only; the exact pipeline never
    calls this.
    """
    with ctx.workdps():
        nu = mp.mpc(nu)
        delta = mp.mpf(ASYMPTOTIC_DELTA)
        phi = z.phase
        if abs(phi) <= mp.pi - delta:
            zz = z.value()
            return (-1j * mp.exp(1j * (mp.pi - phi) * nu) / (1 + mp.exp(-1j * phi))
                    * mp.exp(-zz - z.modulus) / mp.sqrt(2 * mp.pi * z.modulus))
        if delta <= phi <= 2 * mp.pi - delta:
            c = c_of_phi(phi, ctx)
            return mp.mpf(1) / 2 + mp.erf(c * mp.sqrt(z.modulus / 2)) / 2
        raise DomainError(
            f"phase {phi} outside both asymptotic regimes (delta={delta})")
