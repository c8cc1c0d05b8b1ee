"""Value-plus-radius arithmetic for certified constant derivations.

An ``ErrorBounded`` is a real number together with a certified absolute
error radius: the true value of the expression it represents lies in
[value - radius, value + radius].  Arithmetic propagates radii outward —
sums of input radii, Lipschitz bounds on the enclosing interval for the
elementary functions — and every operation adds a rounding slack of four
units in the last place of the result.  This is far cheaper than a full
interval package and plenty for certifying constants whose derivations are
a few dozen operations deep (radii stay near 1e-13).

Comparisons against published targets go through ``clears``: a derived
constant clears a target iff the *entire* enclosure is on the right side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["ErrorBounded", "EB_E", "EB_PI", "eb_exp", "eb_log", "eb_pow", "eb_sqrt"]

_SLACK_ULPS = 4.0


def _slack(value: float) -> float:
    return _SLACK_ULPS * math.ulp(abs(value)) if math.isfinite(value) else math.inf


def _as_eb(x: "ErrorBounded | float | int") -> "ErrorBounded":
    if isinstance(x, ErrorBounded):
        return x
    return ErrorBounded(float(x), 0.0)


@dataclass(frozen=True)
class ErrorBounded:
    """A real value with a certified absolute-error radius."""

    value: float
    radius: float = 0.0

    def __post_init__(self) -> None:
        if self.radius < 0.0 or math.isnan(self.radius):
            raise ValueError("radius must be non-negative")

    @property
    def lower(self) -> float:
        return self.value - self.radius

    @property
    def upper(self) -> float:
        return self.value + self.radius

    def clears(self, published: float, direction: str) -> bool:
        """True iff the whole enclosure is on the stated side of published."""
        if direction == "<=":
            return self.upper <= published
        if direction == ">=":
            return self.lower >= published
        raise ValueError(f"unknown direction {direction!r}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ErrorBounded | float | int") -> "ErrorBounded":
        o = _as_eb(other)
        v = self.value + o.value
        return ErrorBounded(v, self.radius + o.radius + _slack(v))

    __radd__ = __add__

    def __neg__(self) -> "ErrorBounded":
        return ErrorBounded(-self.value, self.radius)

    def __sub__(self, other: "ErrorBounded | float | int") -> "ErrorBounded":
        return self + (-_as_eb(other))

    def __rsub__(self, other: "ErrorBounded | float | int") -> "ErrorBounded":
        return _as_eb(other) + (-self)

    def __mul__(self, other: "ErrorBounded | float | int") -> "ErrorBounded":
        o = _as_eb(other)
        v = self.value * o.value
        rad = abs(self.value) * o.radius + abs(o.value) * self.radius + self.radius * o.radius
        return ErrorBounded(v, rad + _slack(v))

    __rmul__ = __mul__

    def reciprocal(self) -> "ErrorBounded":
        if abs(self.value) <= self.radius:
            raise ZeroDivisionError("enclosure contains zero")
        v = 1.0 / self.value
        rad = self.radius / (abs(self.value) * (abs(self.value) - self.radius))
        return ErrorBounded(v, rad + _slack(v))

    def __truediv__(self, other: "ErrorBounded | float | int") -> "ErrorBounded":
        return self * _as_eb(other).reciprocal()

    def __rtruediv__(self, other: "ErrorBounded | float | int") -> "ErrorBounded":
        return _as_eb(other) * self.reciprocal()

    def __repr__(self) -> str:
        return f"ErrorBounded({self.value!r}, radius={self.radius:.3e})"


# -- elementary functions (Lipschitz bound on the enclosing interval) -------


def eb_log(x: ErrorBounded | float) -> ErrorBounded:
    x = _as_eb(x)
    if x.lower <= 0.0:
        raise ValueError("log requires a strictly positive enclosure")
    v = math.log(x.value)
    rad = x.radius / x.lower
    return ErrorBounded(v, rad + _slack(v))


def eb_exp(x: ErrorBounded | float) -> ErrorBounded:
    x = _as_eb(x)
    v = math.exp(x.value)
    # exp is convex: the worst deviation over [v-r, v+r] is on the upper side.
    rad = v * math.expm1(x.radius) if x.radius > 0.0 else 0.0
    return ErrorBounded(v, rad + _slack(v))


def eb_sqrt(x: ErrorBounded | float) -> ErrorBounded:
    x = _as_eb(x)
    if x.lower < 0.0:
        raise ValueError("sqrt requires a non-negative enclosure")
    v = math.sqrt(x.value)
    rad = x.radius / (2.0 * math.sqrt(x.lower)) if x.lower > 0.0 else math.sqrt(x.radius)
    return ErrorBounded(v, rad + _slack(v))


def eb_pow(x: ErrorBounded | float, a: float) -> ErrorBounded:
    """x^a for a positive enclosure and fixed real exponent a."""
    x = _as_eb(x)
    if x.lower <= 0.0:
        raise ValueError("pow requires a strictly positive enclosure")
    v = x.value**a
    rad = max(abs(x.upper**a - v), abs(v - x.lower**a))
    return ErrorBounded(v, rad + _slack(v))


# Mathematical constants: the float is within one ulp of the true value.
EB_PI = ErrorBounded(math.pi, math.ulp(math.pi))
EB_E = ErrorBounded(math.e, math.ulp(math.e))
