import mpmath as mp
import pytest

from lerchstokes import ArgTrackedZ, DomainError, PoleError, c_of_phi, terminant
from lerchstokes.terminant import continue_past_pi, terminant_asymptotic


def e1_series(z, dps):
    """Gamma(0, z) by the classical entire-series expansion
    -gamma - log z - sum (-z)^k / (k * k!), valid for |arg z| < pi."""
    with mp.workdps(dps):
        z = mp.mpc(z)
        acc = -mp.euler - mp.log(z)
        term = mp.mpc(1)
        for k in range(1, 200):
            term *= -z / k
            acc -= term / k
            if abs(term / k) < mp.mpf(10) ** (-dps):
                break
        return acc


def incomplete_gamma_ode(alpha, modulus, phase0, phase1, dps):
    """Continue Gamma(alpha, R e^{i phi}) in phase by integrating
    dG/dphi = -z^(alpha-1) e^(-z) * dz/dphi with the power carried as
    exp((alpha-1)(log R + i phi)), so no branch cut is ever touched."""
    with mp.workdps(dps):
        alpha = mp.mpc(alpha)
        r = mp.mpf(modulus)
        start = mp.gammainc(alpha, r * mp.exp(1j * mp.mpf(phase0)), mp.inf)

        def dG(phi):
            z = r * mp.exp(1j * phi)
            zpow = mp.exp((alpha - 1) * (mp.log(r) + 1j * phi))
            return -zpow * mp.exp(-z) * 1j * z

        return start + mp.quad(dG, [mp.mpf(phase0), mp.mpf(phase1)],
                               maxdegree=8)


class TestArgTrackedZ:
    def test_construction(self, ctx30):
        z = ArgTrackedZ.from_polar(3, "1.2", ctx30)
        with ctx30.workdps():
            assert abs(z.value() - 3 * mp.exp(1j * mp.mpf("1.2"))) < ctx30.tol
            w = z.shifted(2)
            assert abs(w.phase - mp.mpf("3.2")) < ctx30.tol

    def test_domain(self, ctx30):
        with pytest.raises(DomainError):
            ArgTrackedZ.from_polar(0, 1, ctx30)
        with pytest.raises(DomainError):
            ArgTrackedZ.from_polar(-2, 1, ctx30)
        with ctx30.workdps():
            with pytest.raises(DomainError):
                ArgTrackedZ(mp.mpf(1), 3 * mp.pi / 2)


class TestTerminantPrincipal:
    def test_nu_one_against_e1_series(self, ctx30):
        # T_1(z) = -Gamma(0, z) / (2 pi i)
        for zval in (mp.mpc(2, 1), mp.mpc("0.5", "-1.5")):
            with ctx30.workdps():
                z = ArgTrackedZ(abs(zval), mp.arg(zval))
                want = -e1_series(zval, 2 * ctx30.dps) / (2j * mp.pi)
                got = terminant(1, z, ctx30)
                assert abs(got - want) < abs(want) * 10 * ctx30.tol

    def test_pole(self, ctx30):
        z = ArgTrackedZ.from_polar(2, 0, ctx30)
        for nu in (0, -3):
            with pytest.raises(PoleError):
                terminant(nu, z, ctx30)


class TestContinuation:
    @pytest.mark.parametrize("phase_over_pi", ["1.1", "-1.1", "1.4", "-1.4"])
    def test_against_phase_ode_oracle(self, ctx30, phase_over_pi):
        # independent route: numerically continue the incomplete gamma in
        # phase, never invoking the connection formula
        with ctx30.workdps():
            nu = mp.mpc("3.7", "0.4")
            r = mp.mpf(3)
            phase = mp.mpf(phase_over_pi) * mp.pi
            start = mp.sign(phase) * mp.pi / 2
            g_cont = incomplete_gamma_ode(1 - nu, r, start, phase,
                                          2 * ctx30.dps)
            want = mp.expjpi(nu) * mp.gamma(nu) / (2j * mp.pi) * g_cont
            got = terminant(nu, ArgTrackedZ(r, phase), ctx30)
            assert abs(got - want) < max(1, abs(want)) \
                * mp.mpf(10) ** (-(ctx30.digits - 5))

    def test_continuity_across_upper_cut(self, ctx30):
        with ctx30.workdps():
            nu = mp.mpc("2.3", "-0.1")
            eps = mp.mpf(10) ** -12
            below = terminant(nu, ArgTrackedZ(mp.mpf(4), mp.pi - eps), ctx30)
            above = terminant(nu, ArgTrackedZ(mp.mpf(4), mp.pi + eps), ctx30)
            assert abs(below - above) < mp.mpf(10) ** -10

    def test_continuity_across_lower_cut(self, ctx30):
        with ctx30.workdps():
            nu = mp.mpc("2.3", "-0.1")
            eps = mp.mpf(10) ** -12
            below = terminant(nu, ArgTrackedZ(mp.mpf(4), -mp.pi - eps), ctx30)
            above = terminant(nu, ArgTrackedZ(mp.mpf(4), -mp.pi + eps), ctx30)
            assert abs(below - above) < mp.mpf(10) ** -10

    def test_rejects_principal_phase(self, ctx30):
        with pytest.raises(DomainError):
            continue_past_pi(2.5, ArgTrackedZ.from_polar(2, 1, ctx30), ctx30)


class TestCOfPhi:
    def test_zero_at_pi(self, ctx30):
        with ctx30.workdps():
            assert c_of_phi(mp.pi, ctx30) == 0

    def test_linear_near_pi(self, ctx30):
        with ctx30.workdps():
            for u in (mp.mpf("1e-4"), mp.mpf("-1e-4")):
                c = c_of_phi(mp.pi + u, ctx30)
                assert abs(c / u - 1) < mp.mpf("1e-3")

    def test_continuous_on_grid(self, ctx30):
        with ctx30.workdps():
            prev = None
            phi = mp.mpf("0.2")
            while phi < 2 * mp.pi - mp.mpf("0.2"):
                c = c_of_phi(phi, ctx30)
                if prev is not None:
                    assert abs(c - prev) < mp.mpf("0.1")
                prev = c
                phi += mp.mpf("0.02")

    def test_domain(self, ctx30):
        for phi in (0, "6.2832", -1):
            with pytest.raises(DomainError):
                c_of_phi(phi, ctx30)


class TestAsymptotic:
    def test_half_at_stokes_line(self, ctx30):
        with ctx30.workdps():
            z = ArgTrackedZ(mp.mpf(30), mp.pi)
            nu = mp.mpf(30) + mp.mpf("0.3")
            got = terminant_asymptotic(nu, z, ctx30)
            assert abs(got - mp.mpf(1) / 2) < ctx30.tol

    @pytest.mark.parametrize("mod", [20, 40])
    def test_smoothing_accuracy_near_cut(self, ctx30, mod):
        # leading-order error decays like |z|^(-1/2); allow a lenient factor
        with ctx30.workdps():
            z = ArgTrackedZ(mp.mpf(mod), mp.mpf("0.9") * mp.pi)
            nu = mp.mpf(mod) + mp.mpf("0.25")
            exact = terminant(nu, z, ctx30)
            approx = terminant_asymptotic(nu, z, ctx30)
            assert abs(approx - exact) < 2 / mp.sqrt(mp.mpf(mod))

    def test_domain(self, ctx30):
        with ctx30.workdps():
            with pytest.raises(DomainError):
                terminant_asymptotic(5, ArgTrackedZ(mp.mpf(5),
                                                    mp.mpf("-1.2") * mp.pi),
                                     ctx30)
