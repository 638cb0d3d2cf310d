"""Lerch transcendent and descendants: series/integral agreement, closed
forms, derivatives, decomposition, polygamma paths."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from leroy_kit.errors import ConvergenceError, DomainError
from leroy_kit.lerch_family import (
    EvalMethod,
    chi_c,
    chi_c_deriv2n,
    chi_c_deriv2n_printed,
    chi_s_deriv2n,
    chi_s_part,
    hermite_kdf,
    hurwitz_zeta,
    legendre_chi,
    lerch,
    lerch_deriv,
    lerch_gen,
    lerch_gen_deriv,
    polygamma,
    polygamma2,
    polylog,
    polylog_half,
    ti_gen,
    ti_gen_deriv,
)

# frozen reference values (25+ digits upstream)
CATALAN = 0.91596559417721902
PI2_OVER_8 = 1.2337005501361698
PI2_OVER_6 = 1.6449340668482264
ZETA3 = 1.2020569031595943
LI2_QUARTER = 0.26765263908273261
LERCH_NEG5 = 0.54985582521216166  # Phi(-5; 1, 2) by the defining integral
TWO_LN_2 = 1.3862943611198906


def fd_derivative(f, x, n, h):
    if n == 1:
        d1 = (f(x + h) - f(x - h)) / (2.0 * h)
        d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h
        return (4.0 * d2 - d1) / 3.0
    fx = f(x)
    d1 = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h)
    d2 = (f(x + 0.5 * h) - 2.0 * fx + f(x - 0.5 * h)) / (0.25 * h * h)
    return (4.0 * d2 - d1) / 3.0


class TestLerch:
    def test_at_zero(self):
        assert lerch(0.0, 2.0, 3.0).value == pytest.approx(0.125, rel=1e-14)

    def test_log_closed_form(self):
        # Phi(z; 1, 1) = -ln(1-z)/z
        assert lerch(0.5, 1.0, 1.0).value == pytest.approx(TWO_LN_2, rel=1e-12)

    def test_integral_mode_deep_negative(self):
        r = lerch(-5.0, 1.0, 2.0, EvalMethod.INTEGRAL)
        assert r.value == pytest.approx(LERCH_NEG5, rel=1e-11)

    def test_integral_matches_independent_trapezoid(self):
        # independent oracle: plain refined trapezoid of the same integrand
        # on u = e^-t in (0, 1], an entirely different code path
        import numpy as np

        zeta, alpha, s = -5.0, 1.0, 2.0
        n = 1 << 18
        u = (np.arange(n) + 0.5) / n
        vals = (-np.log(u)) ** (s - 1.0) * u ** (alpha - 1.0) / (1.0 - zeta * u)
        ref = vals.sum() / n / math.gamma(s)
        got = lerch(zeta, alpha, s, EvalMethod.INTEGRAL).value
        assert got == pytest.approx(ref, abs=5e-9)

    def test_series_integral_agreement_full_grid(self):
        for zeta in (-0.8, -0.5, 0.5, 0.8):
            for alpha in (0.5, 1.0, 2.0):
                for s in (0.5, 1.0, 2.0, 3.0):
                    a = lerch(zeta, alpha, s, EvalMethod.SERIES).value
                    b = lerch(zeta, alpha, s, EvalMethod.INTEGRAL).value
                    assert a == pytest.approx(b, rel=1e-9), (zeta, alpha, s)

    def test_zeta_zero_all_methods(self):
        a = lerch(0.0, 1.5, 2.0, EvalMethod.SERIES).value
        b = lerch(0.0, 1.5, 2.0, EvalMethod.INTEGRAL).value
        assert a == pytest.approx(b, rel=1e-11)

    def test_auto_threshold(self):
        from leroy_kit.series_engine import Method

        assert lerch(0.9, 1.0, 2.0).method is Method.SERIES
        assert lerch(0.95, 1.0, 2.0).method is Method.QUADRATURE

    def test_unit_argument_routes_to_hurwitz(self):
        assert lerch(1.0, 1.0, 2.0).value == pytest.approx(PI2_OVER_6, rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            lerch(1.5, 1.0, 2.0)
        with pytest.raises(DomainError):
            lerch(1.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            lerch(0.5, -1.0, 2.0)
        with pytest.raises(DomainError):
            lerch(-3.0, 1.0, -1.0, EvalMethod.INTEGRAL)  # integral needs s > 0


class TestLerchGen:
    def test_beta_one_reduction(self):
        for zeta in (-0.7, 0.4):
            assert lerch_gen(zeta, 1.3, 1.0, 2.0).value == pytest.approx(
                lerch(zeta, 1.3, 2.0).value, rel=1e-12
            )

    def test_at_zero(self):
        assert lerch_gen(0.0, 0.5, 2.0, 3.0).value == pytest.approx(
            0.5**-3.0, rel=1e-13
        )

    def test_brute_force_sum(self):
        from leroy_kit.gamma_kernel import pochhammer

        zeta, alpha, beta, s = 0.3, 0.5, 2.0, 1.0
        ref = sum(
            pochhammer(beta, float(r)) * zeta**r / ((r + alpha) ** s * math.factorial(r))
            for r in range(200)
        )
        assert lerch_gen(zeta, alpha, beta, s).value == pytest.approx(ref, rel=1e-12)

    def test_divergence_guard(self):
        with pytest.raises(ConvergenceError):
            lerch_gen(1.0, 1.0, 2.0, 1.0)


class TestLerchDerivatives:
    def test_order_zero(self):
        assert lerch_deriv(0.4, 1.0, 2.0, 0).value == pytest.approx(
            lerch(0.4, 1.0, 2.0).value, rel=1e-13
        )

    @pytest.mark.parametrize("n", [1, 2])
    def test_plain_derivative(self, n):
        fd = fd_derivative(lambda z: lerch(z, 1.0, 2.0, EvalMethod.SERIES).value, 0.4, n, 0.04)
        assert lerch_deriv(0.4, 1.0, 2.0, n).value == pytest.approx(fd, rel=1e-6)

    @pytest.mark.parametrize("n", [1, 2])
    def test_generalised_derivative(self, n):
        fd = fd_derivative(lambda z: lerch_gen(z, 0.7, 1.5, 1.0).value, 0.2, n, 0.04)
        assert lerch_gen_deriv(0.2, 0.7, 1.5, 1.0, n).value == pytest.approx(fd, rel=1e-6)


class TestPolylog:
    def test_dilog_value(self):
        assert polylog(2.0, 0.25).value == pytest.approx(LI2_QUARTER, rel=1e-12)

    def test_zero(self):
        assert polylog(2.0, 0.0).value == 0.0

    def test_log_case(self):
        assert polylog(1.0, 0.5).value == pytest.approx(math.log(2.0), rel=1e-12)

    def test_partial_sum_oracle(self):
        ref = sum(0.25**k / k**2 for k in range(1, 41))
        assert polylog(2.0, 0.25).value == pytest.approx(ref, rel=1e-12)

    def test_negative_argument_via_integral(self):
        # eta-function slice: Li_1(-1) = -ln 2
        assert polylog(1.0, -1.0).value == pytest.approx(-math.log(2.0), rel=1e-10)


class TestPolylogHalf:
    def test_at_zero(self):
        assert polylog_half(2.0, 0.0).value == 1.0

    def test_first_coefficients(self):
        from leroy_kit.series_engine import ImageKind, UmbralImage, iter_terms
        from leroy_kit.gamma_kernel import Nu
        import itertools

        s, zeta = 2.0, 0.7
        img = UmbralImage(Nu(1.0, 1.0, s), ImageKind.INDEX_SCALED, param=0.5)
        terms = list(itertools.islice(iter_terms(img, zeta, 0), 6))
        for r, term in enumerate(terms):
            lit = (
                math.gamma(1.0 + r / 2.0)
                / (1.0 + r / 2.0) ** s
                * zeta**r
                / math.factorial(r)
            )
            assert term == pytest.approx(lit, rel=1e-13)

    def test_entire_in_both_directions(self):
        assert math.isfinite(polylog_half(1.0, 9.0).value)
        assert math.isfinite(polylog_half(1.0, -9.0).value)


class TestInverseTangentIntegral:
    def test_catalan(self):
        assert ti_gen(1.0, 2.0).value == pytest.approx(CATALAN, abs=1e-11)

    def test_arctan(self):
        assert ti_gen(1.0, 1.0).value == pytest.approx(math.pi / 4.0, abs=1e-11)

    def test_zero(self):
        assert ti_gen(0.0, 2.0).value == 0.0

    def test_interior_matches_direct_sum(self):
        z, s = 0.6, 2.0
        ref = sum((-1.0) ** r * z ** (2 * r + 1) / (2 * r + 1) ** s for r in range(200))
        assert ti_gen(z, s).value == pytest.approx(ref, rel=1e-12)

    def test_boundary_matches_hurwitz_difference(self):
        # beta-function identity: sum (-1)^r/(2r+1)^s = 4^-s (zeta(s,1/4) - zeta(s,3/4))
        for s in (2.0, 3.0):
            ref = 4.0**-s * (hurwitz_zeta(s, 0.25).value - hurwitz_zeta(s, 0.75).value)
            assert ti_gen(1.0, s).value == pytest.approx(ref, abs=1e-12)

    def test_oddness(self):
        assert ti_gen(-0.7, 2.0).value == pytest.approx(-ti_gen(0.7, 2.0).value, rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            ti_gen(1.5, 2.0)


class TestHermite:
    def test_low_orders(self):
        assert hermite_kdf(0, 2.0, 3.0) == 1.0
        assert hermite_kdf(1, 2.0, 3.0) == 2.0
        assert hermite_kdf(2, 3.0, 2.0) == pytest.approx(13.0)  # x^2 + 2y

    def test_against_recurrence(self):
        # H_{n+1} = x H_n + 2 n y H_{n-1}, validated for n <= 20
        x, y = 1.5, -0.5
        h = [1.0, x]
        for n in range(1, 20):
            h.append(x * h[n] + 2.0 * n * y * h[n - 1])
        for n in range(21):
            assert hermite_kdf(n, x, y) == pytest.approx(h[n], rel=1e-12)

    @given(
        st.integers(min_value=0, max_value=12),
        st.integers(min_value=-3, max_value=3),
        st.integers(min_value=-3, max_value=3),
    )
    @settings(max_examples=120)
    def test_recurrence_exact_on_integers(self, n, x, y):
        lhs = hermite_kdf(n + 1, float(x), float(y))
        rhs = x * hermite_kdf(n, float(x), float(y))
        if n >= 1:
            rhs += 2.0 * n * y * hermite_kdf(n - 1, float(x), float(y))
        assert lhs == rhs

    def test_domain(self):
        with pytest.raises(DomainError):
            hermite_kdf(-1, 1.0, 1.0)


class TestTiDerivatives:
    def test_order_zero_is_lerch_form(self):
        z, s = 0.3, 2.0
        assert ti_gen_deriv(z, s, 0).value == pytest.approx(
            lerch_gen(-z * z, 0.5, 1.0, s).value, rel=1e-13
        )

    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_finite_differences(self, n):
        z, s = 0.3, 2.0

        def f(x):
            return 2.0**s * ti_gen(x, s).value / x

        fd = fd_derivative(f, z, n, 0.04)
        assert ti_gen_deriv(z, s, n).value == pytest.approx(fd, rel=1e-6)


class TestLegendreChi:
    def test_unit_argument(self):
        assert legendre_chi(2.0, 1.0).value == pytest.approx(PI2_OVER_8, rel=1e-12)

    def test_zero(self):
        assert legendre_chi(2.0, 0.0).value == 0.0

    def test_oddness(self):
        for z in (0.3, 0.7, 1.0):
            assert legendre_chi(2.0, -z).value == pytest.approx(
                -legendre_chi(2.0, z).value, rel=1e-13
            )

    def test_series_vs_integral(self):
        for z in (-0.8, 0.5, 0.95):
            a = legendre_chi(2.0, z, EvalMethod.INTEGRAL).value
            ref = sum(z ** (2 * r + 1) / (2 * r + 1) ** 2 for r in range(4000))
            assert a == pytest.approx(ref, rel=1e-9)

    def test_relation_to_even_part(self):
        z, s = 0.6, 3.0
        assert legendre_chi(s, z).value == pytest.approx(
            z * chi_c(s, z).value, rel=1e-12
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            legendre_chi(2.0, 1.2)
        with pytest.raises(DomainError):
            legendre_chi(0.5, 1.0)


class TestChiParts:
    def test_at_zero(self):
        assert chi_c(2.0, 0.0).value == 1.0
        assert chi_s_part(2.0, 0.0).value == 0.0

    def test_decomposition(self):
        z, s = 0.4, 2.0
        total = chi_c(s, z, tol=1e-13).value + chi_s_part(s, z, tol=1e-13).value
        assert total == pytest.approx(
            lerch(z, 1.0, s, EvalMethod.SERIES, tol=1e-13).value, rel=1e-12
        )

    def test_boundary_values(self):
        # c_s(1) = (1 - 2^-s) zeta(s), s_s(1) = 2^-s zeta(s)
        s = 2.0
        assert chi_c(s, 1.0).value == pytest.approx(
            (1.0 - 2.0**-s) * PI2_OVER_6, rel=1e-12
        )
        assert chi_s_part(s, 1.0).value == pytest.approx(2.0**-s * PI2_OVER_6, rel=1e-12)


class TestChiDerivatives:
    def test_order_zero(self):
        assert chi_c_deriv2n(2.0, 0.3, 0).value == chi_c(2.0, 0.3).value
        assert chi_s_deriv2n(2.0, 0.3, 0).value == chi_s_part(2.0, 0.3).value

    def test_second_derivative_vs_differences(self):
        s, z = 2.0, 0.3
        fd_c = fd_derivative(lambda x: chi_c(s, x).value, z, 2, 0.05)
        assert chi_c_deriv2n(s, z, 1).value == pytest.approx(fd_c, rel=1e-5)
        fd_s = fd_derivative(lambda x: chi_s_part(s, x).value, z, 2, 0.05)
        assert chi_s_deriv2n(s, z, 1).value == pytest.approx(fd_s, rel=1e-5)

    def test_coefficients_match_term_wise_differentiation(self):
        # d^2/dz^2 of sum a_r z^(2r): coefficient r picks up (2r+2)(2r+1)
        # from coefficient r+1 of the underlying series
        s, n = 2.0, 1
        for r in range(10):
            derived = (
                math.prod(range(2 * r + 1, 2 * r + 2 * n + 1))
                / (2 * r + 2 * n + 1) ** s
            )
            upstream = (2 * r + 2) * (2 * r + 1) / (2 * (r + 1) + 1) ** s
            assert derived == pytest.approx(upstream, rel=1e-12)

    def test_printed_form_disagrees(self):
        s, z = 2.0, 0.3
        fd_c = fd_derivative(lambda x: chi_c(s, x).value, z, 2, 0.05)
        printed = chi_c_deriv2n_printed(s, z, 1).value
        assert abs(printed - fd_c) / abs(fd_c) > 1e-3


class TestHurwitzZeta:
    def test_basel(self):
        assert hurwitz_zeta(2.0, 1.0).value == pytest.approx(PI2_OVER_6, rel=1e-13)

    def test_apery(self):
        assert hurwitz_zeta(3.0, 1.0).value == pytest.approx(ZETA3, rel=1e-13)

    def test_shift_identity(self):
        s, a = 2.5, 0.7
        lhs = hurwitz_zeta(s, a).value - hurwitz_zeta(s, a + 1.0).value
        assert lhs == pytest.approx(a**-s, rel=1e-12)

    def test_against_scipy(self):
        from scipy.special import zeta as scipy_zeta

        for s in (1.5, 2.0, 4.2):
            for a in (0.3, 1.0, 7.5):
                assert hurwitz_zeta(s, a).value == pytest.approx(
                    float(scipy_zeta(s, a)), rel=1e-12
                )

    def test_domain(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(1.0, 1.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, 0.0)


class TestPolygamma:
    def test_trigamma_at_one(self):
        assert polygamma(1, 1.0).value == pytest.approx(PI2_OVER_6, rel=1e-12)

    def test_tetragamma_at_one(self):
        assert polygamma(2, 1.0).value == pytest.approx(-2.0 * ZETA3, rel=1e-12)

    def test_telescoping(self):
        a = 0.8
        lhs = polygamma(1, a).value - polygamma(1, a + 1.0).value
        assert lhs == pytest.approx(a**-2.0, rel=1e-12)

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 3.0])
    def test_dual_paths_agree(self, m, alpha):
        a = polygamma(m, alpha, path="zeta").value
        b = polygamma(m, alpha, path="integral").value
        assert a == pytest.approx(b, rel=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            polygamma(0, 1.0)
        with pytest.raises(DomainError):
            polygamma(1, -1.0)
        with pytest.raises(DomainError):
            polygamma(1, 1.0, path="bogus")


class TestPolygamma2:
    def test_reduces_at_unit_argument(self):
        for m, a in ((1, 1.0), (2, 0.8)):
            assert polygamma2(m, a, 1.0).value == pytest.approx(
                polygamma(m, a).value, rel=1e-12
            )

    def test_at_zeta_zero(self):
        assert polygamma2(1, 1.0, 0.0).value == pytest.approx(1.0, rel=1e-13)

    def test_integral_path_agreement(self):
        for m, a, z in ((1, 1.0, 0.5), (2, 1.3, -0.5), (3, 0.7, 0.25)):
            lhs = polygamma2(m, a, z, path="lerch").value
            rhs = polygamma2(m, a, z, path="integral").value
            assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            polygamma2(1, 1.0, 1.5)
        with pytest.raises(DomainError):
            polygamma2(0, 1.0, 0.5)
