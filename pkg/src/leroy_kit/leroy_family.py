"""Le Roy-type entire functions and the Prabhakar (three-parameter
Mittag-Leffler) function, with their closed-form derivative identities.

All evaluators are series-backed through :mod:`series_engine`; strongly
negative arguments whose alternating series would drown in cancellation are
rerouted to the contour evaluator in :mod:`negative_axis` when the order
admits one.
"""

from __future__ import annotations

import math

from .errors import ConvergenceError, DomainError
from .gamma_kernel import Nu, PhiPow, Psi, ln_gamma, pochhammer, rgamma_pow
from .negative_axis import leroy_negative, leroy_negative_supported, prabhakar_negative
from .series_engine import (
    EvalResult,
    ImageKind,
    Method,
    UmbralImage,
    sum_image,
    sum_series,
)

__all__ = [
    "leroy",
    "leroy_gen",
    "leroy_deriv",
    "leroy4",
    "prabhakar",
    "prabhakar_deriv",
]

# Series summation keeps full significance while the largest intermediate
# term stays below e^12 (~4e5); beyond that an alternating sum has lost more
# than ~1e-11 absolute and a stable reroute is required.
_CANCEL_PLAIN = 12.0
_CANCEL_DD = 30.0


def _leroy_cancellation(x: float, mu: float) -> float:
    # log of the largest term of sum x^r / Gamma(1+r)^mu
    return mu * x ** (1.0 / mu) if mu > 0.0 else 0.0


def _prabhakar_cancellation(y: float, alpha: float) -> float:
    # log of the largest term of the Prabhakar series at argument -y: the
    # Pochhammer numerator nearly cancels the r!, leaving ~ y^r / Gamma(alpha r)
    return y ** (1.0 / alpha)


def leroy(zeta: float, mu: float, tol: float = 1e-12, max_terms: int = 10_000) -> EvalResult:
    """L(zeta; mu) = sum zeta^r / Gamma(1+r)^mu.

    Entire in zeta for mu > 0; mu = 0 is the geometric series (|zeta| < 1);
    mu < 0 has zero convergence radius and fails with ``ConvergenceError``
    for any zeta != 0 (its resummation lives in the transforms module).
    """
    img = UmbralImage(PhiPow(1.0, 1.0, mu), ImageKind.GEOMETRIC)
    if zeta < 0.0 and mu > 0.0:
        cl = _leroy_cancellation(-zeta, mu)
        dd = mu == math.floor(mu) and abs(mu) <= 8
        if cl > (_CANCEL_DD if dd else _CANCEL_PLAIN):
            if leroy_negative_supported(mu):
                value, err, level = _leroy_contour(-zeta, mu)
                return EvalResult(value, err, level, Method.QUADRATURE)
            raise ConvergenceError(
                f"L({zeta!r}; {mu!r}): series cancellation exceeds double "
                "precision and no contour route exists for this order"
            )
    return sum_image(img, zeta, tol, max_terms)


def _leroy_contour(x: float, mu: float) -> tuple[float, float, int]:
    value, err = leroy_negative(x, mu)
    return value, err, 0


def leroy_gen(
    zeta: float,
    alpha: float,
    beta: float,
    mu: float,
    tol: float = 1e-12,
    max_terms: int = 10_000,
) -> EvalResult:
    """Generalised form: sum zeta^r / (r! Gamma(1+beta+alpha r)^(mu-1))."""
    if not alpha > 0.0:
        raise DomainError(f"leroy_gen requires alpha > 0, got {alpha!r}")
    img = UmbralImage(PhiPow(alpha, 1.0 + beta, mu - 1.0), ImageKind.EXPONENTIAL)
    return sum_image(img, zeta, tol, max_terms)


def leroy_deriv(
    zeta: float, mu: float, n: int, tol: float = 1e-12, max_terms: int = 10_000
) -> EvalResult:
    """n-th zeta-derivative of L(zeta; mu) in closed form.

    The derivative collapses to the generalised evaluator with an integer
    index offset: sum zeta^r / (r! Gamma(1+n+r)^(mu-1)).  This closed form
    (rather than term-wise differentiation) is deliberately what the
    finite-difference harness exercises.
    """
    if n < 0:
        raise DomainError("derivative order must be >= 0")
    if n == 0:
        return leroy(zeta, mu, tol, max_terms)
    return leroy_gen(zeta, 1.0, float(n), mu, tol, max_terms)


def leroy4(
    zeta: float,
    alpha: float,
    beta: float,
    gamma_: float,
    delta: float,
    tol: float = 1e-12,
    max_terms: int = 10_000,
) -> EvalResult:
    """Four-parameter form: sum zeta^r / (Gamma(1+beta+alpha r) Gamma(1+delta+gamma_ r))."""
    if not (alpha > 0.0 and gamma_ > 0.0):
        raise DomainError("leroy4 requires alpha > 0 and gamma_ > 0")
    if 1.0 + beta <= 0.0 or 1.0 + delta <= 0.0:
        raise DomainError("leroy4 requires 1+beta > 0 and 1+delta > 0")

    def terms():
        mult = 1.0
        r = 0
        while True:
            yield (
                mult
                * rgamma_pow(1.0 + beta + alpha * r, 1.0)
                * rgamma_pow(1.0 + delta + gamma_ * r, 1.0)
            )
            mult *= zeta
            r += 1

    return sum_series(terms, tol, max_terms)


def prabhakar(
    zeta: float,
    alpha: float,
    beta: float,
    gamma_: float,
    tol: float = 1e-12,
    max_terms: int = 10_000,
) -> EvalResult:
    """E_{alpha,beta,gamma}(zeta) = sum (gamma)_r zeta^r / (r! Gamma(alpha r + beta))."""
    if not alpha > 0.0:
        raise DomainError(f"prabhakar requires alpha > 0, got {alpha!r}")
    if zeta < 0.0 and gamma_ > 0.0:
        cl = _prabhakar_cancellation(-zeta, alpha)
        if cl > _CANCEL_PLAIN:
            try:
                value, err = prabhakar_negative(-zeta, alpha, beta, gamma_)
            except DomainError as exc:
                raise ConvergenceError(
                    f"E({zeta!r}; {alpha!r}, {beta!r}, {gamma_!r}): series "
                    f"cancellation exceeds double precision ({exc})"
                ) from exc
            return EvalResult(value, err, 0, Method.QUADRATURE)
    img = UmbralImage(Psi(alpha, beta, gamma_), ImageKind.EXPONENTIAL)
    return sum_image(img, zeta, tol, max_terms)


def prabhakar_deriv(
    zeta: float,
    alpha: float,
    beta: float,
    gamma_: float,
    n: int,
    tol: float = 1e-12,
    max_terms: int = 10_000,
) -> EvalResult:
    """n-th derivative: (gamma)_n E_{alpha, beta+alpha n, gamma+n}(zeta)."""
    if n < 0:
        raise DomainError("derivative order must be >= 0")
    if n == 0:
        return prabhakar(zeta, alpha, beta, gamma_, tol, max_terms)
    factor = pochhammer(gamma_, float(n))
    base = prabhakar(zeta, alpha, beta + alpha * n, gamma_ + n, tol, max_terms)
    return EvalResult(
        factor * base.value,
        abs(factor) * base.abs_err,
        base.terms_or_level,
        base.method,
    )
