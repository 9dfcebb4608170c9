import itertools
from fractions import Fraction

import mpmath as mp
import pytest

from lerchstokes import DomainError
from lerchstokes.coeffs import (PPoly, p_poly, periodic_zeta_neg, stirling2,
                                zeta_neg_int)


def partitions_into_blocks(n, r):
    """Count set partitions of {1..n} into exactly r nonempty blocks by
    brute-force enumeration of block assignments."""
    count = 0
    for assign in itertools.product(range(r), repeat=n):
        blocks = set(assign)
        if len(blocks) != r:
            continue
        # canonical: block labels appear in first-use order, kills relabelings
        seen = []
        for a in assign:
            if a not in seen:
                seen.append(a)
        if seen == sorted(seen):
            count += 1
    return count


class TestStirling2:
    def test_enumeration_oracle(self):
        for n in range(1, 8):
            for r in range(1, n + 1):
                assert stirling2(n, r) == partitions_into_blocks(n, r)

    def test_known_value(self):
        assert stirling2(5, 3) == 25

    def test_row_sums_are_bell_numbers(self):
        bell = [1, 2, 5, 15, 52, 203, 877]
        for n, b in enumerate(bell, start=1):
            assert sum(stirling2(n, r) for r in range(1, n + 1)) == b

    def test_domain(self):
        with pytest.raises(DomainError):
            stirling2(3, 0)
        with pytest.raises(DomainError):
            stirling2(3, 4)


class TestPPoly:
    def test_small_cases_by_hand(self):
        assert p_poly(1).coefficients == ()
        assert p_poly(2).coefficients == (1,)
        assert p_poly(3).coefficients == (1, 1)
        assert p_poly(4).coefficients == (1, 4, 1)
        assert p_poly(5).coefficients == (1, 11, 11, 1)

    def test_palindromy_enforced_up_to_12(self):
        for n in range(1, 13):
            p = p_poly(n)  # __post_init__ validates palindromy and c0=1
            assert p.n == n

    def test_coefficient_sum_is_factorial(self):
        # P_n(1) = (n-1)! since all n-1 blocks of permutations are counted
        fact = 1
        for n in range(2, 10):
            fact *= n - 1
            assert sum(p_poly(n).coefficients) == fact

    def test_evaluate_horner(self):
        p = PPoly(4, (1, 4, 1))
        x = mp.mpc("0.3", "0.2")
        assert abs(p.evaluate(x) - (1 + 4 * x + x * x)) < 1e-25

    def test_trivial_evaluates_to_one(self):
        assert p_poly(1).evaluate(mp.mpc(7)) == 1

    def test_power_sum_identity(self):
        # sum_{m>=1} m^k x^m = x P_{k+1}(x) / (1-x)^(k+1), checked against a
        # brute-force sum at x = 0.37
        with mp.workdps(40):
            x = mp.mpf("0.37")
            for k in range(0, 8):
                brute = mp.nsum(lambda m: m ** k * x ** m, [1, mp.inf])
                closed = x * p_poly(k + 1).evaluate(x) / (1 - x) ** (k + 1)
                assert abs(brute - closed) < mp.mpf(10) ** -30

    def test_validation(self):
        with pytest.raises(ValueError):
            PPoly(4, (1, 4, 2))  # not palindromic
        with pytest.raises(ValueError):
            PPoly(4, (2, 4, 2))  # leading coefficient
        with pytest.raises(ValueError):
            PPoly(3, (1, 1, 1))  # wrong length
        with pytest.raises(DomainError):
            PPoly(0, ())


class TestPeriodicZetaNeg:
    def test_polylog_oracle(self, ctx30):
        # F(lam, -k) = Li_{-k}(e^{2 pi i lam}); mpmath's polylog takes an
        # unrelated code path (rational closed forms), so this is independent
        with ctx30.workdps():
            for lam in (mp.mpf(1) / 3, mp.mpf(1) / 2, mp.mpf(2) / 3,
                        mp.mpf("0.1")):
                x = mp.expjpi(2 * lam)
                for k in range(0, 7):
                    got = periodic_zeta_neg(lam, k, ctx30)
                    want = mp.polylog(-k, x)
                    assert abs(got - want) < ctx30.tol * 100

    def test_half_alternating(self, ctx30):
        # lam = 1/2 gives the alternating sums: F(1/2, 0) = -1/2,
        # F(1/2, -1) = -1/4 (Abel values)
        with ctx30.workdps():
            assert abs(periodic_zeta_neg("1/2", 0, ctx30) + mp.mpf(1) / 2) \
                < ctx30.tol
            assert abs(periodic_zeta_neg("1/2", 1, ctx30) + mp.mpf(1) / 4) \
                < ctx30.tol

    def test_domain(self, ctx30):
        for lam in ("0", "1", "1.2", "-0.3"):
            with pytest.raises(DomainError):
                periodic_zeta_neg(lam, 2, ctx30)
        with pytest.raises(DomainError):
            periodic_zeta_neg("1/3", -1, ctx30)


class TestZetaNegInt:
    def test_exact_values(self):
        assert zeta_neg_int(0) == Fraction(-1, 2)
        assert zeta_neg_int(1) == Fraction(-1, 12)
        assert zeta_neg_int(2) == 0
        assert zeta_neg_int(3) == Fraction(1, 120)
        assert zeta_neg_int(7) == Fraction(1, 240)

    def test_against_mpmath_zeta(self):
        with mp.workdps(40):
            for k in range(0, 16):
                exact = zeta_neg_int(k)
                want = mp.zeta(-k)
                got = mp.mpf(exact.numerator) / exact.denominator
                assert abs(got - want) < mp.mpf(10) ** -35

    def test_domain(self):
        with pytest.raises(DomainError):
            zeta_neg_int(-1)
