"""Stable evaluation of entire-series functions far down the negative axis.

Direct summation of alternating series like sum (-x)^r / Gamma(1+r)^mu loses
all significance once the largest intermediate term exceeds ~1/eps times the
result.  For moderate orders there is a classical way out: the coefficient
interpolant of such a series has a vertical-line integral representation

    f(-x) = (1 / 2 pi) * Int_{-inf}^{inf}  M(c + i t) * x^(-c - i t) dt,

where exp(M(s)) interpolates r! * c_r at s = -r, and the line Re s = c runs
inside the analyticity strip.  On the line the integrand decays like
exp(-kappa |t|) with kappa > 0 for the orders supported here, so a bilateral
trapezoid converges geometrically in the step.

Placing c just left of the first interpolant singularity (c = 1 - 1/ln x
for the Le Roy family) keeps the integrand amplitude within a factor e of
the function value, so the evaluation stays accurate to near machine
precision at arbitrarily large x.

Line tables (amplitudes and phases of exp(M)) depend only on the function
parameters and the quantised contour abscissa, so they are cached and each
evaluation reduces to one cosine-dot-product per refinement level.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError, DomainError
from .gamma_kernel import ln_gamma, ln_gamma_complex

__all__ = ["leroy_negative", "prabhakar_negative", "leroy_negative_supported"]

_H0 = 0.25
_MAX_LEVEL = 9
_AMP_CUT = 42.0  # table extends until amplitudes drop by e^-42


def _clngamma(z: complex) -> complex:
    # shift once so the Lanczos sum is evaluated with Re >= 0.5
    if z.real < 0.5:
        return ln_gamma_complex(z + 1.0) - np.log(complex(z))
    return ln_gamma_complex(z)


def _line_values(mfun, c: float, h: float, kappa: float):
    """Amplitudes/phases of exp(M(c + i t)) on the grid t = j h, j >= 0."""
    n = int(_AMP_CUT / (kappa * h)) + 2
    t = np.arange(n) * h
    vals = np.array([mfun(complex(c, tj)) for tj in t])
    return t, np.exp(vals.real), vals.imag


class _LineTable:
    """Per-parameter cache of contour line values, one entry per level."""

    def __init__(self, mfun, c: float, kappa: float):
        self._mfun = mfun
        self.c = c
        self._kappa = kappa
        self._levels: dict[int, tuple] = {}

    def level(self, k: int):
        ent = self._levels.get(k)
        if ent is None:
            ent = _line_values(self._mfun, self.c, _H0 / (1 << k), self._kappa)
            self._levels[k] = ent
        return ent


_CACHE: dict[tuple, _LineTable] = {}


def _contour_sum(table: _LineTable, lnx: float, rel_tol: float) -> tuple[float, float]:
    """Evaluate the trapezoid at successive levels until stable."""
    c = table.c
    prev = None
    best_delta = math.inf
    for k in range(_MAX_LEVEL + 1):
        h = _H0 / (1 << k)
        t, amp, phase = table.level(k)
        s = float(np.dot(amp, np.cos(phase - t * lnx)))
        s -= 0.5 * float(amp[0]) * math.cos(float(phase[0]))  # t = 0 has half weight
        value = (h / math.pi) * math.exp(-c * lnx) * s
        if prev is not None:
            delta = abs(value - prev)
            noise = 2e-16 * math.exp(-c * lnx) * float(amp[0]) * 4.0
            if delta <= max(rel_tol * abs(value), noise):
                return value, max(delta, noise)
            if k >= 4 and delta >= best_delta:
                # refinement bottomed out at the rounding floor
                return value, max(delta, noise)
            best_delta = min(best_delta, delta)
        prev = value
    raise ConvergenceError("contour refinement did not stabilise")


def _quantised_c(lnx: float, upper: float) -> tuple[float, int]:
    n = int(round(max(2.0, min(lnx, 64.0))))
    n = max(n, 2)
    return upper * (1.0 - 1.0 / n), n


def leroy_negative_supported(mu: float) -> bool:
    """True when the contour route can evaluate L(-x; mu)."""
    return 0.0 < mu <= 1.8


def leroy_negative(x: float, mu: float, rel_tol: float = 1e-13) -> tuple[float, float]:
    """L(-x; mu) = sum (-x)^r / Gamma(1+r)^mu for x > 0, 0 < mu <= 1.8.

    Returns (value, error estimate).  Above mu = 1.8 the line integrand no
    longer decays fast enough to be worth refining (and at mu = 2 not at
    all); callers must keep those orders on the series path.
    """
    if x <= 0.0:
        raise DomainError("leroy_negative expects x > 0 (the series argument is -x)")
    if not leroy_negative_supported(mu):
        raise DomainError(f"no stable negative-axis route for mu = {mu!r}")
    lnx = math.log(x)
    c, n = _quantised_c(lnx, 1.0)
    key = ("leroy", mu, n)
    table = _CACHE.get(key)
    if table is None:
        one_minus_mu = 1.0 - mu

        def mfun(s: complex) -> complex:
            return _clngamma(s) + one_minus_mu * _clngamma(1.0 - s)

        kappa = 0.5 * math.pi * (2.0 - mu)
        table = _CACHE[key] = _LineTable(mfun, c, kappa)
    return _contour_sum(table, lnx, rel_tol)


def prabhakar_negative(
    y: float, alpha: float, beta: float, gamma_: float, rel_tol: float = 1e-13
) -> tuple[float, float]:
    """E_{alpha,beta,gamma}(-y) for large y > 0; requires alpha <= 1.8.

    The contour must fit left of s = gamma_ while keeping Re(beta - alpha s)
    positive; parameter sets that squeeze it out raise ``DomainError``.
    """
    if y <= 0.0:
        raise DomainError("prabhakar_negative expects y > 0")
    if not (0.0 < alpha <= 1.8):
        raise DomainError(f"no stable negative-axis route for alpha = {alpha!r}")
    if gamma_ <= 0.0:
        raise DomainError("prabhakar_negative requires gamma_ > 0")
    lny = math.log(y)
    c, n = _quantised_c(lny, gamma_)
    c = min(c, (beta - 0.55) / alpha)
    if c <= 0.05:
        raise DomainError(
            f"contour squeezed out for (alpha, beta, gamma) = {(alpha, beta, gamma_)!r}"
        )
    key = ("prabhakar", alpha, beta, gamma_, n, round(c, 12))
    table = _CACHE.get(key)
    if table is None:
        lg = ln_gamma(gamma_)

        def mfun(s: complex) -> complex:
            return (
                _clngamma(s)
                + _clngamma(gamma_ - s)
                - lg
                - _clngamma(beta - alpha * s)
            )

        kappa = 0.5 * math.pi * (2.0 - alpha)
        table = _CACHE[key] = _LineTable(mfun, c, kappa)
    return _contour_sum(table, lny, rel_tol)
