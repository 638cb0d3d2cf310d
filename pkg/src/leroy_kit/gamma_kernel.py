"""Real-argument gamma machinery and the coefficient families built on it.

Everything downstream (series, transforms, the identity harness) reduces to
three primitives computed here:

* ``ln_gamma``     -- log-gamma on the positive axis via a Lanczos rational
  approximation (g = 7, 9 terms), reflection below 0.5;
* ``rgamma_pow``   -- 1/Gamma(x)**mu on the whole real axis, returning 0 at
  the nonpositive-integer arguments where the reciprocal gamma vanishes;
* ``pochhammer``   -- Gamma(g+t)/Gamma(g) for arbitrary real displacement t,
  sign handled through the reflection formula.

On top of those sit the three coefficient ("ground state") families whose
values at the term index supply the series coefficients everywhere else in
the package:

* ``PhiPow(alpha, beta, mu)``:  t -> 1/Gamma(beta + alpha*t)**mu
* ``Psi(alpha, beta, gamma_)``: t -> (gamma_)_t / Gamma(alpha*t + beta)
* ``Nu(alpha, beta, s)``:       t -> (beta)_t / (t + alpha)**s
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, PoleError

__all__ = [
    "ln_gamma",
    "gamma_sign",
    "ln_abs_gamma",
    "rgamma_pow",
    "pochhammer",
    "GroundState",
    "PhiPow",
    "Psi",
    "Nu",
]

# Lanczos coefficients, g = 7, 9 terms (Godfrey's set). Relative accuracy of
# the resulting gamma is ~1e-15 over the right half plane.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_LN_SQRT_2PI = 0.9189385332046727417803297  # ln sqrt(2 pi)
_POLE_TOL = 0.0  # poles are detected exactly: t == round(t)


def _lanczos_ln_gamma(x: float) -> float:
    # valid for x >= 0.5
    acc = _LANCZOS_C[0]
    for i in range(1, 9):
        acc += _LANCZOS_C[i] / (x - 1.0 + i)
    t = x - 0.5 + _LANCZOS_G
    return _LN_SQRT_2PI + (x - 0.5) * math.log(t) - t + math.log(acc)


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0, relative error below ~1e-13.

    Raises ``DomainError`` for x <= 0 (use ``ln_abs_gamma`` for the signed
    continuation to the negative axis).
    """
    if not x > 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x!r}")
    if x >= 0.5:
        return _lanczos_ln_gamma(x)
    # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x); on (0, 0.5) the sine
    # is positive, so the log stays real.
    return math.log(math.pi / math.sin(math.pi * x)) - _lanczos_ln_gamma(1.0 - x)


def ln_gamma_complex(z: complex) -> complex:
    """Principal log-gamma for Re z > 0 (same Lanczos coefficients).

    Only used by the contour evaluator for far negative-axis arguments; not
    part of the public surface.
    """
    if z.real <= 0.0:
        raise DomainError("ln_gamma_complex requires Re z > 0")
    acc = complex(_LANCZOS_C[0])
    for i in range(1, 9):
        acc += _LANCZOS_C[i] / (z - 1.0 + i)
    t = z - 0.5 + _LANCZOS_G
    return _LN_SQRT_2PI + (z - 0.5) * cmath.log(t) - t + cmath.log(acc)


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma_sign(x: float) -> int:
    """Sign of Gamma(x); 0 exactly at the nonpositive-integer poles."""
    if x > 0.0:
        return 1
    if _is_nonpositive_int(x):
        return 0
    # Gamma alternates sign on (-1,0), (-2,-1), ...: negative on (-1,0).
    return -1 if math.floor(-x) % 2 == 0 else 1


def ln_abs_gamma(x: float) -> float:
    """ln |Gamma(x)| for any real x that is not a nonpositive integer."""
    if x > 0.0:
        return ln_gamma(x)
    if _is_nonpositive_int(x):
        raise PoleError(f"Gamma pole at {x!r}")
    # |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x))
    return math.log(math.pi / abs(math.sin(math.pi * x))) - ln_gamma(1.0 - x)


def rgamma_pow(x: float, mu: float) -> float:
    """1 / Gamma(x)**mu, defined on the whole real axis.

    At nonpositive-integer x the reciprocal gamma vanishes, so the result is
    0 for mu > 0 and 1 for mu == 0; mu < 0 there is a pole.  Non-integer mu
    with Gamma(x) < 0 would be complex and raises ``DomainError``.
    """
    if mu == 0.0:
        return 1.0
    if _is_nonpositive_int(x):
        if mu > 0.0:
            return 0.0
        raise PoleError(f"1/Gamma({x!r})**{mu!r} diverges at a Gamma pole")
    sign = gamma_sign(x)
    if sign < 0 and mu != math.floor(mu):
        raise DomainError(
            f"Gamma({x!r}) < 0: non-integer power {mu!r} is not real"
        )
    mag = math.exp(-mu * ln_abs_gamma(x))
    if sign < 0 and int(mu) % 2 != 0:
        return -mag
    return mag


def pochhammer(gamma_: float, t: float) -> float:
    """Rising factorial (gamma_)_t = Gamma(gamma_ + t) / Gamma(gamma_).

    Supports negative and fractional displacement t.  The base gamma_ must
    not be a nonpositive integer; gamma_ + t landing on a nonpositive
    integer is a pole of the numerator and raises ``PoleError``.
    """
    if _is_nonpositive_int(gamma_):
        raise DomainError(f"pochhammer base {gamma_!r} is a Gamma pole")
    if t == 0.0:
        return 1.0
    top = gamma_ + t
    if _is_nonpositive_int(top):
        raise PoleError(f"pochhammer: Gamma({top!r}) pole")
    sign = gamma_sign(top) * gamma_sign(gamma_)
    return sign * math.exp(ln_abs_gamma(top) - ln_abs_gamma(gamma_))


# ---------------------------------------------------------------------------
# Ground-state families
# ---------------------------------------------------------------------------

# window, in index units, over which the eagerly derived pole list is
# materialised; pole *checks* are exact and do not rely on this list.
_POLE_WINDOW = 16.0


def _poles_in_window(root_at: float, step: float) -> tuple[float, ...]:
    """Arithmetic progression root_at - k*step (k >= 0) clipped to the window."""
    if step <= 0.0:
        return ()
    poles = []
    t = root_at
    while t >= -_POLE_WINDOW:
        if abs(t) <= _POLE_WINDOW:
            poles.append(t)
        t -= step
    return tuple(sorted(poles))


@dataclass(frozen=True)
class GroundState:
    """Base class: a real function of the term index t.

    The primitive is ``log_abs_value`` (log magnitude plus sign), from which
    ``value`` is derived; the split lets the series engine combine a hugely
    growing state with a hugely shrinking shape factor without overflowing
    either.  Evaluation raises ``PoleError`` on the derived pole set;
    ``domain_poles`` lists the poles with |t| <= 16 (the exact predicate
    ``is_pole`` is authoritative at any index).
    """

    def log_abs_value(self, t: float) -> tuple[float, int]:
        raise NotImplementedError

    def is_pole(self, t: float) -> bool:
        raise NotImplementedError

    @property
    def domain_poles(self) -> tuple[float, ...]:
        return ()

    def value(self, t: float) -> float:
        ln, sign = self.log_abs_value(t)
        if ln > 709.78:
            return math.copysign(math.inf, sign)
        return sign * math.exp(ln)

    def _check(self, t: float) -> None:
        if self.is_pole(t):
            raise PoleError(f"{self!r} undefined at index {t!r}")


@dataclass(frozen=True)
class PhiPow(GroundState):
    """t -> 1/Gamma(beta + alpha*t)**mu  (alpha > 0)."""

    alpha: float
    beta: float
    mu: float
    _poles: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise DomainError(f"PhiPow requires alpha > 0, got {self.alpha!r}")
        if self.mu < 0.0:
            # gamma poles become poles of the state only for negative power
            poles = _poles_in_window(-self.beta / self.alpha, 1.0 / self.alpha)
        else:
            poles = ()
        object.__setattr__(self, "_poles", poles)

    @property
    def domain_poles(self) -> tuple[float, ...]:
        return self._poles

    def is_pole(self, t: float) -> bool:
        return self.mu < 0.0 and _is_nonpositive_int(self.beta + self.alpha * t)

    def log_abs_value(self, t: float) -> tuple[float, int]:
        self._check(t)
        x = self.beta + self.alpha * t
        if self.mu == 0.0:
            return 0.0, 1
        if _is_nonpositive_int(x):
            return -math.inf, 1  # reciprocal gamma is entire, mu > 0 here
        sign = gamma_sign(x)
        if sign < 0 and self.mu != math.floor(self.mu):
            raise DomainError(
                f"Gamma({x!r}) < 0: non-integer power {self.mu!r} is not real"
            )
        out_sign = -1 if sign < 0 and int(self.mu) % 2 != 0 else 1
        return -self.mu * ln_abs_gamma(x), out_sign


@dataclass(frozen=True)
class Psi(GroundState):
    """t -> (gamma_)_t / Gamma(alpha*t + beta)  (alpha > 0)."""

    alpha: float
    beta: float
    gamma_: float
    _poles: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise DomainError(f"Psi requires alpha > 0, got {self.alpha!r}")
        if _is_nonpositive_int(self.gamma_):
            raise DomainError(f"Psi requires gamma_ off the Gamma poles, got {self.gamma_!r}")
        object.__setattr__(self, "_poles", _poles_in_window(-self.gamma_, 1.0))

    @property
    def domain_poles(self) -> tuple[float, ...]:
        return self._poles

    def is_pole(self, t: float) -> bool:
        return _is_nonpositive_int(self.gamma_ + t)

    def log_abs_value(self, t: float) -> tuple[float, int]:
        self._check(t)
        top = self.gamma_ + t
        bottom = self.alpha * t + self.beta
        sign = gamma_sign(top) * gamma_sign(self.gamma_)
        if _is_nonpositive_int(bottom):
            return -math.inf, sign  # the 1/Gamma factor vanishes
        sign *= gamma_sign(bottom)
        ln = ln_abs_gamma(top) - ln_abs_gamma(self.gamma_) - ln_abs_gamma(bottom)
        return ln, sign


@dataclass(frozen=True)
class Nu(GroundState):
    """t -> (beta)_t / (t + alpha)**s."""

    alpha: float
    beta: float
    s: float
    _poles: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if _is_nonpositive_int(self.beta):
            raise DomainError(f"Nu requires beta off the Gamma poles, got {self.beta!r}")
        poles = list(_poles_in_window(-self.beta, 1.0))
        if self.s != 0.0 and abs(self.alpha) <= _POLE_WINDOW:
            poles.append(-self.alpha)
        object.__setattr__(self, "_poles", tuple(sorted(set(poles))))

    @property
    def domain_poles(self) -> tuple[float, ...]:
        return self._poles

    def is_pole(self, t: float) -> bool:
        if self.s != 0.0 and t + self.alpha == 0.0:
            return True
        return _is_nonpositive_int(self.beta + t)

    def log_abs_value(self, t: float) -> tuple[float, int]:
        self._check(t)
        base = t + self.alpha
        sign = 1
        if base < 0.0:
            if self.s != math.floor(self.s):
                raise DomainError(
                    f"({t!r} + {self.alpha!r})**{-self.s!r} is not real for a negative base"
                )
            if int(self.s) % 2 != 0:
                sign = -1
        top = self.beta + t
        sign *= gamma_sign(top) * gamma_sign(self.beta)
        ln = ln_abs_gamma(top) - ln_abs_gamma(self.beta)
        if self.s != 0.0:
            ln -= self.s * math.log(abs(base))
        return ln, sign


def ground_eval(g: GroundState, t: float) -> float:
    """Evaluate a ground state at index t (module-level convenience)."""
    return g.value(t)
