"""Summation of coefficient-family power series ("umbral images").

An :class:`UmbralImage` pairs a ground state g with a series shape; the
shapes and their r-th terms are

* ``EXPONENTIAL``   g(r) zeta^r / r!
* ``GEOMETRIC``     g(r) zeta^r
* ``COSH``          g(2r) zeta^(2r) / (2r)!
* ``SINH``          g(2r+1) zeta^(2r+1) / (2r+1)!
* ``SHIFTED``       g(r + lam) zeta^r / r!          (fractional index power)
* ``INDEX_SCALED``  g(c r) zeta^r / r!              (fractional-order series)

``sum_image`` sums a shape with Neumaier-compensated accumulation and a
three-consecutive-small-terms stopping rule; ``sum_image_derivative``
differentiates n times with respect to zeta by shifting the ground index,
which is exact for every shape above.

For alternating series with large intermediate terms the compensated sum is
still limited by the rounding of the individual terms (absolute noise of
order eps * sum |t_r|).  A double-double fast path covers the one family
where full relative accuracy at strongly negative zeta is required:
``PhiPow`` with alpha = 1 and integer beta, mu, whose term ratios are exact
small integers.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .errors import ConvergenceError, DomainError
from .gamma_kernel import GroundState, PhiPow

__all__ = [
    "Method",
    "EvalResult",
    "ImageKind",
    "UmbralImage",
    "sum_image",
    "sum_image_derivative",
    "sum_series",
    "iter_terms",
]

_EPS = sys.float_info.epsilon
_CONSECUTIVE_SMALL = 3


class Method(str, enum.Enum):
    SERIES = "series"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class EvalResult:
    """Value plus an error estimate and evaluation diagnostics.

    ``abs_err`` is a heuristic bound: 10x the magnitude of the last series
    term (or the last quadrature refinement difference), floored by the
    rounding noise eps * sum|terms| accumulated along the way.
    """

    value: float
    abs_err: float
    terms_or_level: int
    method: Method

    def __post_init__(self):
        if self.abs_err < 0.0:
            raise ValueError("abs_err must be nonnegative")


class ImageKind(enum.Enum):
    EXPONENTIAL = "exponential"
    GEOMETRIC = "geometric"
    COSH = "cosh"
    SINH = "sinh"
    SHIFTED = "shifted"
    INDEX_SCALED = "index_scaled"


@dataclass(frozen=True)
class UmbralImage:
    """A ground state together with the series shape applied to it.

    ``param`` is the shift lam for ``SHIFTED`` and the index scale c for
    ``INDEX_SCALED``; ignored by the other kinds.
    """

    ground: GroundState
    kind: ImageKind
    param: float = 0.0

    def __post_init__(self):
        if self.kind is ImageKind.INDEX_SCALED and self.param <= 0.0:
            raise DomainError("INDEX_SCALED requires a positive index scale")


@lru_cache(maxsize=1 << 18)
def _ground_value(g: GroundState, t: float) -> float:
    return g.value(t)


def _safe_term(g: GroundState, idx: float, mult: float, ln_mult: float, sign: int) -> float:
    """ground(idx) * mult, rescued through logs when the pair is extreme.

    A growing ground against a shrinking shape factor (or vice versa) can
    push either factor past the double range while the product stays
    representable; the log form recombines them exactly then.
    """
    if mult != 0.0:
        v = _ground_value(g, idx) * mult
        if math.isfinite(v):
            return v
    ln_g, g_sign = g.log_abs_value(idx)
    ln_t = ln_g + ln_mult
    if ln_t > 709.78:
        return math.inf if g_sign * sign >= 0 else -math.inf
    return g_sign * sign * math.exp(ln_t)


def _term_stream(img: UmbralImage, zeta: float, n: int) -> Iterator[float]:
    """Yield the terms of the n-th zeta-derivative of the image, in order.

    The derivative shifts every ground index by n; for the hyperbolic kinds
    it additionally flips the parity of the surviving powers when n is odd.
    """
    g = img.ground
    kind = img.kind
    ln_az = math.log(abs(zeta)) if zeta != 0.0 else -math.inf
    zsign = 1 if zeta >= 0.0 else -1
    if kind in (ImageKind.EXPONENTIAL, ImageKind.SHIFTED, ImageKind.INDEX_SCALED):
        shift = img.param if kind is ImageKind.SHIFTED else 0.0
        scale = img.param if kind is ImageKind.INDEX_SCALED else 1.0
        mult, ln_mult, sign = 1.0, 0.0, 1
        r = 0
        while True:
            if kind is ImageKind.INDEX_SCALED:
                idx = scale * (r + n)
            else:
                idx = r + n + shift
            yield _safe_term(g, idx, mult, ln_mult, sign)
            mult *= zeta / (r + 1)
            ln_mult += ln_az - math.log(r + 1)
            sign *= zsign
            r += 1
    elif kind is ImageKind.GEOMETRIC:
        # d^n/dzeta^n sum g(r) zeta^r = sum g(m+n) (m+1)_n zeta^m
        mult = float(math.factorial(n))
        ln_mult, sign = math.log(mult), 1
        m = 0
        while True:
            yield _safe_term(g, float(m + n), mult, ln_mult, sign)
            mult *= zeta * (m + n + 1) / (m + 1)
            ln_mult += ln_az + math.log(m + n + 1) - math.log(m + 1)
            sign *= zsign
            m += 1
    elif kind in (ImageKind.COSH, ImageKind.SINH):
        base_parity = 0 if kind is ImageKind.COSH else 1
        # surviving powers k satisfy k + n congruent to base parity (mod 2)
        k0 = (base_parity - n) % 2
        mult = zeta**k0
        ln_mult = k0 * ln_az
        sign = zsign if k0 else 1
        k = k0
        while True:
            yield _safe_term(g, float(k + n), mult, ln_mult, sign)
            mult *= zeta * zeta / ((k + 1) * (k + 2))
            ln_mult += 2.0 * ln_az - math.log((k + 1) * (k + 2))
            k += 2
    else:  # pragma: no cover
        raise AssertionError(kind)


def iter_terms(img: UmbralImage, zeta: float, n: int = 0) -> Iterator[float]:
    """Public view of the term stream (used by the coefficient oracles)."""
    return _term_stream(img, zeta, n)


def _sum_loop(terms: Iterator[float], tol: float, max_terms: int) -> tuple[float, float, int]:
    """Neumaier-compensated sum with the 3-consecutive-small-terms rule.

    Returns (value, abs_err, terms_used).
    """
    s = 0.0
    comp = 0.0
    sum_abs = 0.0
    small = 0
    last = 0.0
    for count, t in enumerate(terms, start=1):
        if not math.isfinite(t):
            raise ConvergenceError(
                f"series term overflowed after {count} terms", last_estimate=s
            )
        hi = s + t
        if abs(s) >= abs(t):
            comp += (s - hi) + t
        else:
            comp += (t - hi) + s
        s = hi
        sum_abs += abs(t)
        last = t
        if abs(t) <= tol * abs(s + comp):
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                value = s + comp
                err = max(10.0 * abs(last), _EPS * sum_abs)
                return value, err, count
        else:
            small = 0
        if count >= max_terms:
            raise ConvergenceError(
                f"series did not satisfy the stopping rule within {max_terms} terms",
                last_estimate=s + comp,
            )
    raise AssertionError("term stream is infinite")  # pragma: no cover


def sum_series(
    terms: Iterator[float] | Callable[[], Iterator[float]],
    tol: float,
    max_terms: int,
) -> EvalResult:
    """Sum an arbitrary term stream under the engine's stopping rule."""
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    if max_terms < 1:
        raise DomainError("max_terms must be at least 1")
    stream = terms() if callable(terms) else terms
    value, err, count = _sum_loop(stream, tol, max_terms)
    return EvalResult(value, err, count, Method.SERIES)


# ---------------------------------------------------------------------------
# double-double fast path
# ---------------------------------------------------------------------------

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    v = s - a
    return s, (a - (s - v)) + (b - v)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def _dd_add(xh: float, xl: float, yh: float, yl: float) -> tuple[float, float]:
    sh, sl = _two_sum(xh, yh)
    th, tl = _two_sum(xl, yl)
    sl += th
    sh, sl = _two_sum(sh, sl)
    sl += tl
    return _two_sum(sh, sl)


def _dd_mul_d(xh: float, xl: float, d: float) -> tuple[float, float]:
    ph, pl = _two_prod(xh, d)
    pl += xl * d
    return _two_sum(ph, pl)


def _dd_div_d(xh: float, xl: float, d: float) -> tuple[float, float]:
    q1 = xh / d
    ph, pl = _two_prod(q1, d)
    q2 = ((xh - ph) - pl + xl) / d
    return _two_sum(q1, q2)


def _dd_eligible(img: UmbralImage, zeta: float) -> bool:
    g = img.ground
    return (
        isinstance(g, PhiPow)
        and g.alpha == 1.0
        and g.beta == math.floor(g.beta)
        and g.beta >= 1.0
        and g.mu == math.floor(g.mu)
        and abs(g.mu) <= 8
        and img.kind in (ImageKind.EXPONENTIAL, ImageKind.GEOMETRIC)
        and zeta < 0.0
    )


def _sum_phipow_dd(
    img: UmbralImage, zeta: float, n: int, tol: float, max_terms: int
) -> EvalResult:
    """Exact-ratio double-double summation for PhiPow(1, b, m) images.

    Term ratios are products of machine-representable integers, so the
    recurrence and the accumulator both carry ~32 significant digits; the
    cancellation noise floor drops from eps*sum|t| to eps^2*sum|t|.
    """
    g = img.ground
    b = int(g.beta)
    m = int(g.mu)
    exponential = img.kind is ImageKind.EXPONENTIAL
    # r-th term: zeta^r / (r!^[exp] * Gamma(b + r + n)^m), times (r+1)_n for
    # the geometric derivative.
    th, tl = 1.0, 0.0
    start = math.gamma(b + n) if b + n < 171 else None
    if start is None:
        raise ConvergenceError("dd path: initial Gamma overflows")
    for _ in range(abs(m)):
        if m > 0:
            th, tl = _dd_div_d(th, tl, start)
        else:
            th, tl = _dd_mul_d(th, tl, start)
    if not exponential and n:
        th, tl = _dd_mul_d(th, tl, float(math.factorial(n)))
    sh, sl = 0.0, 0.0
    sum_abs = 0.0
    small = 0
    for r in range(max_terms):
        sh, sl = _dd_add(sh, sl, th, tl)
        sum_abs += abs(th)
        if abs(th) <= tol * abs(sh):
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                err = max(10.0 * abs(th), _EPS * _EPS * sum_abs)
                return EvalResult(sh + sl, err, r + 1, Method.SERIES)
        else:
            small = 0
        th, tl = _dd_mul_d(th, tl, zeta)
        if exponential:
            th, tl = _dd_div_d(th, tl, float(r + 1))
        elif n:
            th, tl = _dd_mul_d(th, tl, float(r + n + 1))
            th, tl = _dd_div_d(th, tl, float(r + 1))
        ratio_base = float(b + r + n)
        for _ in range(abs(m)):
            if m > 0:
                th, tl = _dd_div_d(th, tl, ratio_base)
            else:
                th, tl = _dd_mul_d(th, tl, ratio_base)
        if not math.isfinite(th):
            raise ConvergenceError("dd series term overflowed", last_estimate=sh)
    raise ConvergenceError(
        f"dd series did not converge within {max_terms} terms", last_estimate=sh
    )


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def _geometric_everywhere(g: GroundState) -> bool:
    # reciprocal-gamma decay beats any geometric growth
    return isinstance(g, PhiPow) and g.mu > 0.0


def sum_image(
    img: UmbralImage, zeta: float, tol: float = 1e-12, max_terms: int = 10_000
) -> EvalResult:
    """Sum the image at zeta.

    Geometric images of non-decaying grounds are refused for |zeta| >= 1 up
    front (the series is divergent there; resummation is a transform-level
    concern).
    """
    return sum_image_derivative(img, zeta, 0, tol, max_terms)


def sum_image_derivative(
    img: UmbralImage,
    zeta: float,
    n: int,
    tol: float = 1e-12,
    max_terms: int = 10_000,
) -> EvalResult:
    """n-th zeta-derivative of the image (n = 0 reproduces ``sum_image``)."""
    if n < 0:
        raise DomainError("derivative order must be >= 0")
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    if max_terms < 1:
        raise DomainError("max_terms must be at least 1")
    if (
        img.kind is ImageKind.GEOMETRIC
        and abs(zeta) >= 1.0
        and not _geometric_everywhere(img.ground)
    ):
        raise ConvergenceError(
            f"geometric image diverges for |zeta| >= 1 (zeta = {zeta!r})"
        )
    if _dd_eligible(img, zeta):
        return _sum_phipow_dd(img, zeta, n, tol, max_terms)
    value, err, count = _sum_loop(_term_stream(img, zeta, n), tol, max_terms)
    return EvalResult(value, err, count, Method.SERIES)
