"""Adaptive double-exponential quadrature on [0, inf), (-inf, inf), [0, inf)^2.

One scheme family covers every integrand shape in the package:

* tanh-sinh on [0, split_point] -- absorbs integrable endpoint power
  singularities t**(s-1) without special-casing;
* exp-sinh on [split_point, inf) -- handles exponential and algebraic decay;
* a sinh map for whole-line integrals.

Levels halve the trapezoid step; the error estimate is the difference
between consecutive levels plus a tail guard built from the outermost
retained contributions.  Node tables are built lazily per level and cached
module-wide (geometry only, integrand independent; each cache entry is
written once).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DomainError
from .series_engine import EvalResult, Method

__all__ = [
    "QuadratureConfig",
    "integrate_semi_inf",
    "integrate_real_line",
    "integrate_semi_inf_2d",
]

_H0 = 0.5  # level-0 trapezoid step
_T_TS = 6.0  # tanh-sinh range cap (endpoint offsets ~1e-276 at the edge)
_T_ES_NEG = 6.0  # exp-sinh range toward the finite endpoint
_T_ES_POS = 5.0  # exp-sinh range toward infinity (x - a up to ~4e50)
_T_WL = 24.0  # sinh-map range (|x| up to ~1.3e10)
_NEGLIGIBLE_RUN = 8  # consecutive negligible pairs before truncating a scan


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-11
    abs_tol: float = 1e-14
    max_level: int = 12
    split_point: float = 1.0

    def __post_init__(self):
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0:
            raise DomainError("tolerances must be positive")
        if self.max_level < 3:
            raise DomainError("max_level must be at least 3")
        if self.split_point <= 0.0:
            raise DomainError("split_point must be positive")


def _h_at(level: int) -> float:
    return _H0 / (1 << level)


def _new_js(level: int):
    """Trapezoid indices new at this level (all at level 0, odd ones after)."""
    j = 0 if level == 0 else 1
    step = 1 if level == 0 else 2
    while True:
        yield j
        j = j + step if j else 1


def _ts_nodes(level: int) -> list[tuple[float, float]]:
    """tanh-sinh nodes new at this level, as (offset, weight) on [0, 1].

    ``offset`` is the node-pair distance from either endpoint; the t = 0
    node (offset exactly 0.5) appears only at level 0.
    """
    h = _h_at(level)
    out = []
    for j in _new_js(level):
        t = j * h
        if t > _T_TS:
            break
        u = 0.5 * math.pi * math.sinh(t)
        e = math.exp(-2.0 * u)
        d = e / (1.0 + e)
        w = 0.25 * math.pi * math.cosh(t) * (4.0 * e / (1.0 + e) ** 2)
        if j > 0 and (d == 0.0 or w == 0.0):
            break
        out.append((d, w))
    return out


def _es_nodes(level: int) -> tuple[list[tuple[float, float, float]], list[tuple[float, float, float]]]:
    """exp-sinh nodes new at this level, as (t, x_offset, weight) scans.

    The first scan runs toward infinity (t >= 0; the t = 0 node appears only
    at level 0), the second toward the finite endpoint (t < 0); they are
    kept separate so each can truncate independently.
    """
    h = _h_at(level)
    pos = []
    for j in _new_js(level):
        t = j * h
        if t > _T_ES_POS:
            break
        u = 0.5 * math.pi * math.sinh(t)
        x = math.exp(u)
        pos.append((t, x, 0.5 * math.pi * math.cosh(t) * x))
    neg = []
    for j in _new_js(level):
        if j == 0:
            continue
        t = -j * h
        if -t > _T_ES_NEG:
            break
        u = 0.5 * math.pi * math.sinh(t)
        x = math.exp(u)
        w = 0.5 * math.pi * math.cosh(t) * x
        if x == 0.0 or w == 0.0:
            break
        neg.append((t, x, w))
    return pos, neg


def _wl_nodes(level: int) -> list[tuple[float, float]]:
    """sinh-map nodes new at this level, as (|x|, weight)."""
    h = _h_at(level)
    out = []
    for j in _new_js(level):
        t = j * h
        if t > _T_WL:
            break
        out.append((math.sinh(t), math.cosh(t)))
    return out


_TS_CACHE: dict[int, list] = {}
_ES_CACHE: dict[int, list] = {}
_WL_CACHE: dict[int, list] = {}


def _cached(cache: dict, level: int, builder) -> list:
    tbl = cache.get(level)
    if tbl is None:
        tbl = builder(level)
        cache[level] = tbl
    return tbl


def _contrib(f: Callable[[float], float], x: float, w: float, in_tail: bool = False) -> float:
    try:
        v = f(x) * w
    except OverflowError:
        if in_tail:
            return 0.0  # extreme node past an already-negligible run
        raise ConvergenceError(f"integrand overflowed at x = {x!r}") from None
    if math.isfinite(v):
        return v
    if w < 1e-250 or (in_tail and math.isnan(v)):
        return 0.0  # integrable endpoint blow-up under a vanishing weight
    raise ConvergenceError(f"integrand not finite at x = {x!r}")


def _refine(partial, cfg: QuadratureConfig, what: str) -> tuple[float, float, int]:
    """Level loop: partial(level) -> (sum of new contributions, tail guard)."""
    value = 0.0
    prev = None
    for level in range(cfg.max_level + 1):
        h = _h_at(level)
        new, tail = partial(level)
        value = (value * 0.5 if level > 0 else 0.0) + h * new
        if level >= 2 and prev is not None:
            est = abs(value - prev) + tail * h
            if est <= max(cfg.rel_tol * abs(value), cfg.abs_tol):
                return value, est, level
        prev = value
    raise ConvergenceError(
        f"{what}: estimates failed to converge within {cfg.max_level} levels",
        last_estimate=prev,
    )


def integrate_semi_inf(
    f: Callable[[float], float], cfg: QuadratureConfig | None = None
) -> EvalResult:
    """Integral of f over (0, inf).

    f may have an integrable power singularity at 0 and must decay at
    infinity, exponentially or at least like an integrable power.
    """
    cfg = cfg or QuadratureConfig()
    b = cfg.split_point
    floor = cfg.abs_tol * 1e-2

    def ts_partial(level: int):
        total = 0.0
        run = 0
        for d, w in _cached(_TS_CACHE, level, _ts_nodes):
            if d == 0.5:
                total += _contrib(f, 0.5 * b, w)
                continue
            c = _contrib(f, b * d, w) + _contrib(f, b - b * d, w)
            total += c
            if abs(c) <= floor:
                run += 1
                if run >= _NEGLIGIBLE_RUN:
                    break
            else:
                run = 0
        return total * b, 0.0

    def es_partial(level: int):
        pos, neg = _cached(_ES_CACHE, level, _es_nodes)
        total = 0.0
        tail = 0.0
        run = 0
        for t, x, w in pos:
            c = _contrib(f, b + x, w, in_tail=run >= 2)
            total += c
            if t > 1.5:
                if abs(c) <= floor:
                    run += 1
                    if run >= _NEGLIGIBLE_RUN:
                        break
                else:
                    run = 0
                    tail = abs(c)
        run = 0
        for t, x, w in neg:
            c = _contrib(f, b + x, w)
            total += c
            if abs(c) <= floor:
                run += 1
                if run >= _NEGLIGIBLE_RUN:
                    break
            else:
                run = 0
        return total, tail

    v1, e1, l1 = _refine(ts_partial, cfg, "tanh-sinh segment")
    v2, e2, l2 = _refine(es_partial, cfg, "exp-sinh segment")
    return EvalResult(v1 + v2, e1 + e2, max(l1, l2), Method.QUADRATURE)


def integrate_real_line(
    f: Callable[[float], float], cfg: QuadratureConfig | None = None
) -> EvalResult:
    """Integral of f over the whole real line via the sinh map.

    Symmetric node pairs are summed together, so odd integrands cancel
    exactly.  The range cap keeps nodes below |x| ~ 1.3e10; the outermost
    retained pair is charged to the error estimate as a truncation guard.
    """
    cfg = cfg or QuadratureConfig()
    floor = cfg.abs_tol * 1e-2

    def partial(level: int):
        total = 0.0
        tail = 0.0
        run = 0
        for x, w in _cached(_WL_CACHE, level, _wl_nodes):
            if x == 0.0:
                total += _contrib(f, 0.0, w)
                continue
            c = _contrib(f, x, w, in_tail=run >= 2) + _contrib(f, -x, w, in_tail=run >= 2)
            total += c
            if abs(c) <= floor:
                run += 1
                if run >= _NEGLIGIBLE_RUN:
                    break
            else:
                run = 0
                tail = abs(c)
        # singly-exponential tails truncate at the range cap; charge the
        # remaining geometric tail at the outermost retained magnitude
        return total, tail * 2.0

    v, e, lvl = _refine(partial, cfg, "whole-line integral")
    return EvalResult(v, e, lvl, Method.QUADRATURE)


def integrate_semi_inf_2d(
    f: Callable[[float, float], float], cfg: QuadratureConfig | None = None
) -> EvalResult:
    """Iterated integral of f over (0, inf)^2 (inner in v, outer in u)."""
    cfg = cfg or QuadratureConfig()
    inner_err_max = 0.0

    def outer_integrand(u: float) -> float:
        nonlocal inner_err_max
        try:
            r = integrate_semi_inf(lambda v: f(u, v), cfg)
        except ConvergenceError as exc:
            raise ConvergenceError(
                f"inner (v) integral failed at u = {u!r}: {exc}"
            ) from exc
        inner_err_max = max(inner_err_max, r.abs_err)
        return r.value

    try:
        outer = integrate_semi_inf(outer_integrand, cfg)
    except ConvergenceError as exc:
        if "inner (v)" in str(exc):
            raise
        raise ConvergenceError(f"outer (u) integral failed: {exc}") from exc
    return EvalResult(
        outer.value,
        outer.abs_err + inner_err_max,
        outer.terms_or_level,
        Method.QUADRATURE,
    )
