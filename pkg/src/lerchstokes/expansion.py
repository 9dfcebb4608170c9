"""Large-a expansions of the Lerch zeta function.

Two layers: the classical algebraic (Poincare) expansion, and the exact
exponentially improved decomposition into per-m algebraic blocks H_m plus
terminant remainder pairs (R_m, R_m') under a truncation schedule.  The
decomposition is exact for *any* valid schedule; optimal truncation merely
makes the remainders exponentially small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import mpmath as mp

from . import coeffs
from .errors import DomainError, PoleError, TailError
from .mpcore import CNum, ComplexLike, PrecisionContext, hurwitz_zeta
from .oracle import LerchParams, f_lambda_zero, lerch_reference
from .terminant import ArgTrackedZ, terminant


@dataclass(frozen=True)
class TruncationSchedule:
    """Strictly increasing truncation indices {N_k}, {N'_k} for k=0..m_max,
    with the convention N_{-1} = N'_{-1} = 1."""

    N: Tuple[int, ...]
    Nprime: Tuple[int, ...]

    def __post_init__(self):
        for name, seq in (("N", self.N), ("Nprime", self.Nprime)):
            if not seq:
                raise DomainError(f"schedule {name} must be non-empty")
            if any(n < 1 for n in seq):
                raise DomainError(f"schedule {name} entries must be >= 1: {seq}")
            if any(b <= a for a, b in zip(seq, seq[1:])):
                raise DomainError(
                    f"schedule {name} must be strictly increasing: {seq}")
        if len(self.N) != len(self.Nprime):
            raise DomainError("N and Nprime must have equal length")

    @property
    def m_max(self) -> int:
        return len(self.N) - 1

    def bounds(self, m: int) -> Tuple[int, int]:
        """r-range [N_{m-1}, N_m) of the unprimed block m."""
        return (1 if m == 0 else self.N[m - 1], self.N[m])

    def bounds_prime(self, m: int) -> Tuple[int, int]:
        return (1 if m == 0 else self.Nprime[m - 1], self.Nprime[m])

    @classmethod
    def optimal(cls, p: LerchParams, ctx: PrecisionContext,
                m_max: Optional[int] = None) -> "TruncationSchedule":
        """Least-term truncation indices for each k, with m_max sized so the
        omitted tail sits below the working accuracy (floor 2)."""
        with ctx.workdps():
            a_mod = abs(p.a)
            if m_max is None:
                m_max = max(2, int(mp.ceil(
                    (ctx.digits + 8) * mp.log(10) / (2 * mp.pi * a_mod))))
            n = []
            npr = []
            for k in range(m_max + 1):
                n.append(optimal_truncation(k, p.lam, a_mod, p.s, ctx))
                if p.lam < 1:
                    npr.append(optimal_truncation(k, p.lam_prime, a_mod,
                                                  p.s, ctx))
                else:
                    # primed frequencies are k itself (floor 1), one behind
                    # the unprimed ladder
                    npr.append(optimal_truncation(max(k - 1, 0), 1, a_mod,
                                                  p.s, ctx))
            n = _force_increasing(n)
            npr = _force_increasing(npr)
            return cls(tuple(n), tuple(npr))


def _force_increasing(seq: List[int]) -> List[int]:
    out = list(seq)
    for i in range(1, len(out)):
        if out[i] <= out[i - 1]:
            out[i] = out[i - 1] + 1
    return out


def optimal_truncation(k: int, xi, a_mod, s: ComplexLike,
                       ctx: PrecisionContext) -> int:
    """Index N minimizing the magnitude of the first omitted inner term
    |Gamma(N+s)| / (2 pi a_mod)^(N+Re s) / (k+xi)^(N+1), searched over
    N in [1, ceil(4 pi (k+xi) a_mod) + 10]; ties break toward smaller N."""
    with ctx.workdps():
        xi = mp.mpf(xi)
        a_mod = mp.mpf(a_mod)
        s = mp.mpc(s)
        if not a_mod > 0:
            raise DomainError(f"a_mod must be positive, got {a_mod}")
        if not 0 < xi <= 1:
            raise DomainError(f"xi must lie in (0, 1], got {xi}")
        hi = int(mp.ceil(4 * mp.pi * (k + xi) * a_mod)) + 10
        log2pa = mp.log(2 * mp.pi * a_mod)
        logkxi = mp.log(k + xi)
        best_n, best_v = 1, mp.inf
        for n in range(1, hi + 1):
            v = (mp.re(mp.loggamma(n + s)) - (n + mp.re(s)) * log2pa
                 - (n + 1) * logkxi)
            if v < best_v:
                best_n, best_v = n, v
        return best_n


def poincare_expand(p: LerchParams, K: int,
                    ctx: PrecisionContext) -> Tuple[CNum, List[CNum]]:
    """K-term truncated algebraic expansion; returns (partial sum, terms).

    For lam < 1 the terms are a^{-s}/(1-w) followed by the F(lam,-k)
    coefficients; for lam = 1 the Bernoulli-number series for the Hurwitz
    zeta function, whose k=0 entry bundles a^{1-s}/(s-1) + a^{-s}/2.
    """
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    with ctx.workdps():
        a, s = p.a, p.s
        terms: List[CNum] = []
        if p.lam == 1:
            if s == 1:
                raise PoleError("expansion undefined at lam=1, s=1")
            terms.append(a ** (1 - s) / (s - 1) + a ** (-s) / 2)
            inv_gs = 1 / mp.gamma(s)
            for k in range(1, K):
                terms.append(inv_gs * mp.bernoulli(2 * k) / mp.factorial(2 * k)
                             * mp.gamma(2 * k + s - 1) / a ** (2 * k + s - 1))
        else:
            w = mp.expjpi(2 * p.lam)
            terms.append(a ** (-s) / (1 - w))
            poch = mp.mpc(1)
            for k in range(1, K):
                poch *= s + (k - 1)  # (s)_k built incrementally
                fk = coeffs.periodic_zeta_neg(p.lam, k, ctx)
                terms.append((-1) ** k * poch / mp.factorial(k)
                             * fk * a ** (-s - k))
        return mp.fsum(terms), terms


def poincare_remainder(p: LerchParams, K: int, ctx: PrecisionContext) -> CNum:
    """R_K = L_reference - K-term algebraic partial sum."""
    with ctx.workdps():
        total, _ = poincare_expand(p, K, ctx)
        return lerch_reference(p, ctx) - total


def _a_coeff(r: int, p: LerchParams, sign: int) -> CNum:
    """(sign*i)^r Gamma(r+s) / (2 pi a)^(r+s)."""
    return (sign * 1j) ** r * mp.gamma(r + p.s) / (2 * mp.pi * p.a) ** (r + p.s)


def _zeta_partial(r1: int, w, k_hi: int, m: int) -> CNum:
    """sum_{k=m}^{k_hi} (k + w - m)^-r1 written as a partial Hurwitz sum
    starting at w = m + lam."""
    return mp.fsum((w + j) ** (-r1) for j in range(k_hi - m + 1))


def h_block(m: int, p: LerchParams, sch: TruncationSchedule,
            ctx: PrecisionContext, k_max: Optional[int] = None) -> CNum:
    """Algebraic block H_m: the unprimed r-sum weighted by
    zeta(r+1, m+lam) minus the primed twin.  With k_max given, the Hurwitz
    zetas are replaced by partial sums up to k_max (finite-rearrangement
    form used by the finite rearrangement identity checks)."""
    if m > sch.m_max:
        raise DomainError(f"m={m} exceeds schedule m_max={sch.m_max}")
    with ctx.workdps():
        total = mp.mpc(0)
        lo, hi = sch.bounds(m)
        for r in range(lo, hi):
            z = (hurwitz_zeta(r + 1, m + p.lam, ctx) if k_max is None
                 else _zeta_partial(r + 1, m + p.lam, k_max, m))
            total += _a_coeff(r, p, -1) * z
        # for lam=1 the primed frequency ladder starts at 1, not at m=0's
        # zero frequency; the block keeps its rows, only shifted to start
        # there, while the zero-frequency remainder itself is absent
        if p.lam == 1 and m == 0:
            w_prime, m_start = mp.mpf(1), 1
        else:
            w_prime, m_start = m + p.lam_prime, m
        lo, hi = sch.bounds_prime(m)
        for r in range(lo, hi):
            z = (hurwitz_zeta(r + 1, w_prime, ctx) if k_max is None
                 else _zeta_partial(r + 1, w_prime, k_max, m_start))
            total -= _a_coeff(r, p, +1) * z
        return total


def remainder_terms(m: int, p: LerchParams, sch: TruncationSchedule,
                    ctx: PrecisionContext) -> Tuple[CNum, Optional[CNum]]:
    """Terminant remainder pair (R_m, R'_m); R'_0 is None for lam=1 where
    the primed m=0 contribution is absent."""
    if m > sch.m_max:
        raise DomainError(f"m={m} exceeds schedule m_max={sch.m_max}")
    with ctx.workdps():
        a, s = p.a, p.s
        theta = p.theta
        X = 2 * mp.pi * a * (m + p.lam)
        z = ArgTrackedZ(abs(X), theta - mp.pi / 2)
        r_m = mp.exp(-1j * X - 1j * mp.pi * s) * terminant(sch.N[m] + s, z, ctx)
        if p.lam == 1 and m == 0:
            return r_m, None
        Xp = 2 * mp.pi * a * (m + p.lam_prime)
        zp = ArgTrackedZ(abs(Xp), theta + mp.pi / 2)
        rp_m = mp.exp(1j * Xp - 1j * mp.pi * s) * terminant(sch.Nprime[m] + s,
                                                            zp, ctx)
        return r_m, rp_m


@dataclass
class ExpansionBreakdown:
    """Audit trail of the exponentially improved evaluation: leading
    algebraic part, per-m blocks and remainder pairs, and the assembled
    total."""

    params: LerchParams
    schedule: TruncationSchedule
    digits: int
    leading: CNum
    H: List[CNum]
    R: List[CNum]
    Rprime: List[Optional[CNum]]
    total: CNum

    def assemble(self, ctx: PrecisionContext) -> CNum:
        """Recompute the total from the stored parts (invariant check)."""
        with ctx.workdps():
            return self.leading + _assemble_sum(
                self.params, self.H, self.R, self.Rprime)

    def to_json_dict(self) -> dict:
        d = self.digits

        def c(x):
            return None if x is None else [mp.nstr(mp.re(x), d),
                                           mp.nstr(mp.im(x), d)]

        return {
            "lambda": mp.nstr(self.params.lam, d),
            "a_re": mp.nstr(mp.re(self.params.a), d),
            "a_im": mp.nstr(mp.im(self.params.a), d),
            "s_re": mp.nstr(mp.re(self.params.s), d),
            "s_im": mp.nstr(mp.im(self.params.s), d),
            "digits": d,
            "schedule": {"N": list(self.schedule.N),
                         "Nprime": list(self.schedule.Nprime)},
            "leading": c(self.leading),
            "H": [c(x) for x in self.H],
            "R": [c(x) for x in self.R],
            "Rprime": [c(x) for x in self.Rprime],
            "total": c(self.total),
        }


def _assemble_sum(p: LerchParams, H, R, Rprime) -> CNum:
    s = p.s
    pref = (2 * mp.pi) ** s / mp.gamma(s)
    acc = mp.mpc(0)
    for m in range(len(H)):
        term = 1j / (2 * mp.pi) * H[m]
        term -= mp.expjpi(-s / 2) * (m + p.lam) ** (s - 1) * R[m]
        if Rprime[m] is not None:
            term += mp.expjpi(s / 2) * (m + p.lam_prime) ** (s - 1) * Rprime[m]
        acc += term
    return pref * acc


def exp_improved_eval(p: LerchParams, sch: TruncationSchedule,
                      ctx: PrecisionContext) -> ExpansionBreakdown:
    """Exact exponentially improved evaluation under the given schedule.

    Raises TailError when the m-sum cutoff sch.m_max leaves an estimated
    tail above 10^-(digits+5) relative to the total.
    """
    if sch.m_max < 2:
        raise TailError(
            f"m_max={sch.m_max} below the hard floor of 2 for full evaluation")
    with ctx.workdps():
        s = p.s
        leading = (p.eps * p.a ** (1 - s) / (s - 1)
                   + p.a ** (-s) * (1 + f_lambda_zero(p.lam)))
        pref = (2 * mp.pi) ** s / mp.gamma(s)
        H: List[CNum] = []
        R: List[CNum] = []
        Rp: List[Optional[CNum]] = []
        term_mags: List[mp.mpf] = []
        acc = mp.mpc(0)
        for m in range(sch.m_max + 1):
            H.append(h_block(m, p, sch, ctx))
            r_m, rp_m = remainder_terms(m, p, sch, ctx)
            R.append(r_m)
            Rp.append(rp_m)
            term = 1j / (2 * mp.pi) * H[m]
            term -= mp.expjpi(-s / 2) * (m + p.lam) ** (s - 1) * R[m]
            if rp_m is not None:
                term += mp.expjpi(s / 2) * (m + p.lam_prime) ** (s - 1) * rp_m
            acc += term
            term_mags.append(abs(pref * term))
        total = leading + pref * acc
        _check_tail(term_mags, abs(total), ctx)
        return ExpansionBreakdown(params=p, schedule=sch, digits=ctx.digits,
                                  leading=leading, H=H, R=R, Rprime=Rp,
                                  total=total)


def _check_tail(term_mags: Sequence[mp.mpf], total_mag, ctx: PrecisionContext):
    """Geometric extrapolation of the omitted m-tail from the last two
    computed terms."""
    tol = mp.mpf(10) ** (-(ctx.digits + 5)) * total_mag
    last, prev = term_mags[-1], term_mags[-2]
    if last == 0:
        return
    if prev == 0 or last >= prev:
        estimate = mp.inf if last > tol else last
    else:
        ratio = last / prev
        estimate = last * ratio / (1 - ratio)
    if estimate > tol:
        raise TailError(
            f"m-sum tail estimate {mp.nstr(estimate, 5)} exceeds tolerance "
            f"{mp.nstr(tol, 5)}; extend the truncation schedule")


def double_sum_direct(p: LerchParams, sch: TruncationSchedule, k_max: int,
                      ctx: PrecisionContext) -> CNum:
    """The un-rearranged double sum over (k, r) truncated at k_max, with the
    schedule frozen at its last entry for k > m_max.  Finite-rearrangement
    counterpart of the H-block assembly with partial Hurwitz sums."""
    if k_max < sch.m_max:
        raise DomainError(f"k_max={k_max} must be >= m_max={sch.m_max}")
    with ctx.workdps():
        total = mp.mpc(0)
        a_cache: dict = {}
        ap_cache: dict = {}
        for k in range(k_max + 1):
            n_k = sch.N[min(k, sch.m_max)]
            base = mp.mpf(k) + p.lam
            for r in range(1, n_k):
                if r not in a_cache:
                    a_cache[r] = _a_coeff(r, p, -1)
                total += a_cache[r] / base ** (r + 1)
            if p.lam == 1 and k == 0:
                continue
            np_k = sch.Nprime[min(k, sch.m_max)]
            base = mp.mpf(k) + p.lam_prime
            for r in range(1, np_k):
                if r not in ap_cache:
                    ap_cache[r] = _a_coeff(r, p, +1)
                total -= ap_cache[r] / base ** (r + 1)
        return total
