"""Borel-type transforms, Gaussian line integrals, and resummation of the
factorially divergent Euler series.

The two Gaussian line integrals push their integrands far down the negative
axis where direct series summation is impossible in doubles; the family
evaluators transparently switch to the contour route there, so the
quadratures here stay honest end-to-end.

The generalised Borel transform is implemented with the exponents that the
term-wise calculation actually produces (weight t^beta, argument zeta t^alpha);
the printed variant (weight t^mu, argument zeta t^beta) is kept evaluable so
the identity harness can document that it does not satisfy the order-lowering
identity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DomainError
from .gamma_kernel import ln_gamma, pochhammer, rgamma_pow
from .leroy_family import leroy, leroy_gen, prabhakar
from .quadrature import (
    QuadratureConfig,
    integrate_real_line,
    integrate_semi_inf,
    integrate_semi_inf_2d,
)
from .series_engine import EvalResult

__all__ = [
    "borel_transform_leroy",
    "borel_leroy_transform_gen",
    "gauss_transform",
    "kolokoltsov_integral",
    "prabhakar_gauss_integral",
    "prabhakar_gauss_closed_form",
    "euler_d1_bar",
    "euler_d2_bar",
    "euler_d2_bar_gen",
    "euler_ode_residual",
    "DivergentSeriesKind",
    "DivergentSeriesSpec",
    "divergent_partial_sums",
]

# whole-line showcase integrals have slowly decaying tails; the default
# config trades unneeded precision for runtime
_LINE_CFG = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-10)


# a weighted integrand whose growth-vs-weight exponent drops below this is
# treated as an exact zero (e^-60 ~ 9e-27, far below every tolerance in use)
_NEGLIGIBLE_EXPONENT = -60.0


def borel_transform_leroy(
    zeta: float, mu: float, cfg: QuadratureConfig | None = None
) -> EvalResult:
    """Int_0^inf e^-t L(zeta t; mu) dt; lowers the order by one.

    Requires mu >= 1; near mu = 1 the integrand decays only like
    e^(-(1-zeta) t), and zeta above 0.9 would force series evaluations past
    double-precision overflow before the weight wins, hence the guard.
    """
    if mu < 1.0:
        raise DomainError("borel_transform_leroy requires mu >= 1")
    if mu < 1.2 and zeta > 0.9:
        raise DomainError("for mu near 1 the transform needs zeta <= 0.9")

    def f(t: float) -> float:
        u = zeta * t
        # |L(u; mu)| <= exp(mu |u|^(1/mu)) up to a slow prefactor
        if mu * abs(u) ** (1.0 / mu) - t < _NEGLIGIBLE_EXPONENT:
            return 0.0
        return math.exp(-t) * leroy(u, mu).value

    return integrate_semi_inf(f, cfg)


def _leroy_gen_growth(u_abs: float, alpha: float, mu: float) -> float:
    """log of the largest term of sum u^r / (r! Gamma(1+beta+alpha r)^(mu-1))."""
    rho = 1.0 + alpha * (mu - 1.0)
    if rho <= 0.0 or u_abs == 0.0:
        return math.inf if u_abs > 0.0 else 0.0
    return rho * (u_abs * alpha ** (-alpha * (mu - 1.0))) ** (1.0 / rho)


def borel_leroy_transform_gen(
    zeta: float,
    alpha: float,
    beta: float,
    mu: float,
    cfg: QuadratureConfig | None = None,
    printed: bool = False,
) -> EvalResult:
    """Weighted transform of the generalised Le Roy function.

    Derived form (the contract): Int_0^inf e^-t t^beta L(zeta t^alpha;
    alpha, beta, mu) dt, which upgrades the coefficient Gamma power by one
    and therefore equals the mu-1 evaluation.  ``printed=True`` evaluates
    the t^mu / zeta t^beta variant instead (documented mismatch).
    """
    if not alpha > 0.0:
        raise DomainError("borel_leroy_transform_gen requires alpha > 0")
    if beta <= -1.0 and not printed:
        raise DomainError("weight t^beta needs beta > -1 for integrability")

    if printed:
        def f(t: float) -> float:
            u = zeta * t**beta
            if _leroy_gen_growth(abs(u), alpha, mu) - t < _NEGLIGIBLE_EXPONENT:
                return 0.0
            return math.exp(-t) * t**mu * leroy_gen(u, alpha, beta, mu).value
    else:
        def f(t: float) -> float:
            u = zeta * t**alpha
            if _leroy_gen_growth(abs(u), alpha, mu) - t < _NEGLIGIBLE_EXPONENT:
                return 0.0
            return math.exp(-t) * t**beta * leroy_gen(u, alpha, beta, mu).value

    return integrate_semi_inf(f, cfg)


def gauss_transform(
    f: Callable[[float], float], zeta: float, cfg: QuadratureConfig | None = None
) -> EvalResult:
    """Int_-inf^inf e^(-x^2) f(2 x zeta) dx."""

    def g(x: float) -> float:
        weight = math.exp(-x * x)
        if weight == 0.0:
            return 0.0  # nothing subexponential in f can resurrect this node
        return weight * f(2.0 * x * zeta)

    return integrate_real_line(g, cfg)


def kolokoltsov_integral(cfg: QuadratureConfig | None = None) -> EvalResult:
    """Int_-inf^inf L(-z^2; 1/2) dz, expected pi^(3/4).

    The integrand decays only like ~1/(z^2 sqrt(ln z)), so nodes reach
    z ~ 1e10; those evaluations run on the contour route.
    """

    def f(z: float) -> float:
        return leroy(-z * z, 0.5).value

    return integrate_real_line(f, cfg or _LINE_CFG)


def prabhakar_gauss_integral(
    alpha: float, beta: float, gamma_: float, cfg: QuadratureConfig | None = None
) -> EvalResult:
    """Int_-inf^inf E_{alpha,beta,gamma}(-z^2) dz by quadrature.

    Converges only in parameter regimes where the function decays; outside
    of them the quadrature (or the evaluator) fails and the error is the
    guard.
    """

    def f(z: float) -> float:
        return prabhakar(-z * z, alpha, beta, gamma_).value

    return integrate_real_line(f, cfg or _LINE_CFG)


def prabhakar_gauss_closed_form(alpha: float, beta: float, gamma_: float) -> float:
    """sqrt(pi) (gamma)_(-1/2) / Gamma(beta - alpha/2), the expected value."""
    if beta - alpha / 2.0 <= 0.0:
        raise DomainError("closed form requires beta - alpha/2 > 0")
    return (
        math.sqrt(math.pi)
        * pochhammer(gamma_, -0.5)
        * rgamma_pow(beta - alpha / 2.0, 1.0)
    )


# ---------------------------------------------------------------------------
# Euler series resummation
# ---------------------------------------------------------------------------


def euler_d1_bar(x: float, cfg: QuadratureConfig | None = None) -> EvalResult:
    """Resummed value of sum (-1)^r r! x^r: Int_0^inf e^-t / (1 + x t) dt."""
    if x < 0.0:
        raise DomainError("euler_d1_bar requires x >= 0")

    def f(t: float) -> float:
        return math.exp(-t) / (1.0 + x * t)

    return integrate_semi_inf(f, cfg)


def euler_d2_bar(x: float, cfg: QuadratureConfig | None = None) -> EvalResult:
    """Resummed value of sum (-1)^r (r!)^2 x^r:

        Int_0^inf Int_0^inf e^-(u+v) / (1 + u v x) du dv.
    """
    if x < 0.0:
        raise DomainError("euler_d2_bar requires x >= 0")

    def f(u: float, v: float) -> float:
        return math.exp(-(u + v)) / (1.0 + u * v * x)

    return integrate_semi_inf_2d(f, cfg)


def euler_d2_bar_gen(
    x: float, alpha: float, beta: float, cfg: QuadratureConfig | None = None
) -> EvalResult:
    """Resummed value of sum (-1)^r Gamma(1+beta+alpha r)^2 x^r:

        Int_0^inf Int_0^inf e^-(u+v) (u v)^beta / (1 + (u v)^alpha x) du dv.
    """
    if x < 0.0:
        raise DomainError("euler_d2_bar_gen requires x >= 0")
    if not alpha > 0.0:
        raise DomainError("euler_d2_bar_gen requires alpha > 0")
    if beta <= -1.0:
        raise DomainError("euler_d2_bar_gen requires beta > -1")

    def f(u: float, v: float) -> float:
        uv = u * v
        return math.exp(-(u + v)) * uv**beta / (1.0 + uv**alpha * x)

    return integrate_semi_inf_2d(f, cfg)


_ODE_CFG = QuadratureConfig(rel_tol=1e-13, abs_tol=1e-15)


def euler_ode_residual(x: float, cfg: QuadratureConfig | None = None) -> float:
    """|x^2 y' + y - x| with y = x * d1_bar(x), y' by central differences.

    The resummed function solves the defining first-order equation; the
    residual is the test.  The step balances difference truncation against
    quadrature noise amplified by x^2 / h.
    """
    if not x > 0.0:
        raise DomainError("euler_ode_residual requires x > 0")
    cfg = cfg or _ODE_CFG
    h = 2e-4 * max(1.0, x)

    def y(at: float) -> float:
        return at * euler_d1_bar(at, cfg).value

    yprime = (y(x + h) - y(x - h)) / (2.0 * h)
    return abs(x * x * yprime + y(x) - x)


class DivergentSeriesKind(enum.Enum):
    D1 = "d1"  # sum (-1)^r r! x^r
    D2 = "d2"  # sum (-1)^r (r!)^2 x^r
    D2_GEN = "d2_gen"  # sum (-1)^r Gamma(1+beta+alpha r)^2 x^r


@dataclass(frozen=True)
class DivergentSeriesSpec:
    kind: DivergentSeriesKind
    alpha: float = 1.0
    beta: float = 0.0


_PARTIAL_SUM_CAP = 40  # factorial overflow guard for double precision


def divergent_partial_sums(spec: DivergentSeriesSpec, x: float, n: int) -> list[float]:
    """First n partial sums of the divergent series, for optimal-truncation
    comparisons against the resummed values."""
    if n < 1:
        raise DomainError("need at least one partial sum")
    if n > _PARTIAL_SUM_CAP:
        raise DomainError(f"n > {_PARTIAL_SUM_CAP} overflows double precision factorials")
    sums = []
    total = 0.0
    for r in range(n):
        if spec.kind is DivergentSeriesKind.D1:
            coeff = float(math.factorial(r))
        elif spec.kind is DivergentSeriesKind.D2:
            coeff = float(math.factorial(r)) ** 2
        else:
            coeff = math.exp(2.0 * ln_gamma(1.0 + spec.beta + spec.alpha * r))
        term = (-1.0) ** r * coeff * x**r
        if not math.isfinite(term):
            raise ConvergenceError(f"partial-sum term overflowed at order {r}")
        total += term
        sums.append(total)
    return sums
