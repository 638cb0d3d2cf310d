"""Le Roy and Prabhakar evaluators and their derivative identities."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from leroy_kit.errors import ConvergenceError, DomainError
from leroy_kit.leroy_family import (
    leroy,
    leroy4,
    leroy_deriv,
    leroy_gen,
    prabhakar,
    prabhakar_deriv,
)

# frozen oracles (quotient/partial-sum computations, 25+ digits upstream)
LEROY_1_2 = 2.2795853023360673  # sum 1/(r!)^2
LEROY4_BESSELISH = 1.5906368546373291  # sum 1/(r!(r+1)!)
EXPM1_RATIO = 0.63212055882855768  # (e^-1 - 1)/(-1)
LEROY_HALF_NEG = {  # L(-x; 1/2), alternating sums at 120-digit working precision
    8.0: 0.051278392786437464,
    20.0: 0.017038656185202352,
    50.0: 0.0058602863244469068,
}


def fd_derivative(f, x, n, h):
    if n == 1:
        d1 = (f(x + h) - f(x - h)) / (2.0 * h)
        d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h
        return (4.0 * d2 - d1) / 3.0
    fx = f(x)
    d1 = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h)
    d2 = (f(x + 0.5 * h) - 2.0 * fx + f(x - 0.5 * h)) / (0.25 * h * h)
    return (4.0 * d2 - d1) / 3.0


class TestLeroy:
    def test_order_one_is_exp(self):
        assert leroy(1.0, 1.0).value == pytest.approx(math.e, rel=1e-13)

    def test_order_zero_is_geometric(self):
        assert leroy(0.5, 0.0).value == pytest.approx(2.0, rel=1e-13)

    def test_order_two(self):
        assert leroy(1.0, 2.0).value == pytest.approx(LEROY_1_2, rel=1e-13)

    def test_exp_reduction_grid(self):
        # 41-point grid over [-10, 10]
        for k in range(41):
            z = -10.0 + 0.5 * k
            assert leroy(z, 1.0).value == pytest.approx(math.exp(z), rel=1e-12)

    def test_geometric_divergence(self):
        with pytest.raises(ConvergenceError):
            leroy(1.0, 0.0)

    def test_negative_order_diverges(self):
        with pytest.raises(ConvergenceError):
            leroy(0.5, -1.0)

    def test_monotone_positive(self):
        prev = 1.0
        for k in range(1, 21):
            z = 0.25 * k
            v = leroy(z, 0.5).value
            assert v >= prev >= 1.0
            prev = v

    @pytest.mark.parametrize("x,expect", sorted(LEROY_HALF_NEG.items()))
    def test_half_order_negative_axis(self, x, expect):
        assert leroy(-x, 0.5).value == pytest.approx(expect, rel=1e-11)

    def test_contour_and_series_overlap(self):
        # both routes live around the switch point; they must agree
        for x in (4.0, 5.0, 6.0):
            series = leroy(-x, 0.75, tol=1e-14)
            from leroy_kit.negative_axis import leroy_negative

            contour, _ = leroy_negative(x, 0.75)
            assert series.value == pytest.approx(contour, rel=1e-10)

    @given(st.floats(min_value=0.0, max_value=25.0))
    @settings(max_examples=60, deadline=None)
    def test_nonnegative_axis_at_least_one(self, z):
        assert leroy(z, 0.5).value >= 1.0


class TestLeroyGen:
    def test_reduces_to_leroy(self):
        # alpha=1, beta=0: coefficient 1/(r! r!^(mu-1)) with mu=2 -> 1/(r!)^2
        for z in (0.3, 1.0, 2.0):
            assert leroy_gen(z, 1.0, 0.0, 2.0).value == pytest.approx(
                leroy(z, 2.0).value, rel=1e-12
            )

    def test_at_zero(self):
        # r = 0 term only: 1/Gamma(1+beta)^(mu-1)
        assert leroy_gen(0.0, 0.7, 0.5, 3.0).value == pytest.approx(
            math.gamma(1.5) ** -2.0, rel=1e-12
        )

    def test_mu_one_drops_gamma_factor(self):
        assert leroy_gen(1.0, 1.0, 1.0, 1.0).value == pytest.approx(math.e, rel=1e-12)

    def test_coefficient_match(self):
        # term-by-term against the closed coefficient, r <= 20
        z, alpha, beta, mu = 0.8, 0.5, 0.25, 2.5
        total = sum(
            z**r / (math.factorial(r) * math.gamma(1.0 + beta + alpha * r) ** (mu - 1.0))
            for r in range(60)
        )
        assert leroy_gen(z, alpha, beta, mu).value == pytest.approx(total, rel=1e-12)

    def test_validation(self):
        with pytest.raises(DomainError):
            leroy_gen(0.5, 0.0, 0.0, 2.0)


class TestLeroyDeriv:
    def test_order_zero_identity(self):
        assert leroy_deriv(0.7, 2.0, 0).value == leroy(0.7, 2.0).value

    def test_exp_all_derivatives(self):
        assert leroy_deriv(1.0, 1.0, 3).value == pytest.approx(math.e, rel=1e-12)

    @pytest.mark.parametrize("mu", [0.5, 2.0, 3.0])
    @pytest.mark.parametrize("zeta", [-0.8, -0.3, 0.3, 0.8])
    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_finite_differences(self, mu, zeta, n):
        fd = fd_derivative(lambda z: leroy(z, mu).value, zeta, n, 0.05)
        assert leroy_deriv(zeta, mu, n).value == pytest.approx(fd, rel=1e-6)

    def test_negative_order(self):
        with pytest.raises(DomainError):
            leroy_deriv(0.5, 2.0, -1)


class TestLeroy4:
    def test_collapses_to_leroy_two(self):
        for z in (0.4, 1.0):
            assert leroy4(z, 1.0, 0.0, 1.0, 0.0).value == pytest.approx(
                leroy(z, 2.0).value, rel=1e-12
            )

    def test_at_zero(self):
        assert leroy4(0.0, 1.0, 0.5, 1.0, 0.25).value == pytest.approx(
            1.0 / (math.gamma(1.5) * math.gamma(1.25)), rel=1e-12
        )

    def test_offset_factorials(self):
        assert leroy4(1.0, 1.0, 0.0, 1.0, 1.0).value == pytest.approx(
            LEROY4_BESSELISH, rel=1e-12
        )

    def test_validation(self):
        with pytest.raises(DomainError):
            leroy4(0.5, -1.0, 0.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            leroy4(0.5, 1.0, -1.5, 1.0, 0.0)


class TestPrabhakar:
    def test_unit_parameters_give_exp(self):
        for z in (-2.0, 0.3, 1.5):
            assert prabhakar(z, 1.0, 1.0, 1.0).value == pytest.approx(
                math.exp(z), rel=1e-12
            )

    def test_at_zero(self):
        assert prabhakar(0.0, 0.7, 1.3, 2.0).value == pytest.approx(
            1.0 / math.gamma(1.3), rel=1e-12
        )

    def test_expm1_closed_form(self):
        assert prabhakar(-1.0, 1.0, 2.0, 1.0).value == pytest.approx(
            EXPM1_RATIO, rel=1e-12
        )

    def test_deep_negative_argument(self):
        # (1 - e^-y)/y for every scale the quadratures will ever ask for
        for y in (5.0, 50.0, 1e4, 1e12):
            expect = (1.0 - math.exp(-y)) / y if y < 700 else 1.0 / y
            assert prabhakar(-y, 1.0, 2.0, 1.0).value == pytest.approx(expect, rel=1e-9)

    def test_validation(self):
        with pytest.raises(DomainError):
            prabhakar(0.5, 0.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            prabhakar(0.5, 1.0, 1.0, -2.0)  # Psi rejects nonpositive-integer gamma


class TestPrabhakarDeriv:
    def test_order_zero_identity(self):
        assert prabhakar_deriv(0.4, 0.7, 1.3, 2.0, 0).value == pytest.approx(
            prabhakar(0.4, 0.7, 1.3, 2.0).value, rel=1e-14
        )

    def test_exp_case(self):
        assert prabhakar_deriv(0.3, 1.0, 1.0, 1.0, 1).value == pytest.approx(
            math.exp(0.3), rel=1e-12
        )

    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_finite_differences(self, n):
        z, a, b, g = 0.4, 0.7, 1.3, 2.0
        fd = fd_derivative(lambda x: prabhakar(x, a, b, g).value, z, n, 0.05)
        assert prabhakar_deriv(z, a, b, g, n).value == pytest.approx(fd, rel=1e-6)
