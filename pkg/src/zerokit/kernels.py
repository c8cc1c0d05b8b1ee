"""Smoothing kernels for the detection pipeline.

Two kernels live here:

* ``psi_weight``: a compactly supported multiplicative weight.  In the log
  coordinate u = log x it is the density of a sum of 2*degree_n independent
  uniform variables on [-1/A, 1/A], with A = height_T * sqrt(2*degree_n).
  Its Mellin transform is exactly [sinh(s/A) / (s/A)]^(2*degree_n), an entire
  function; the transform pins the weight down uniquely, and the uniform-sum
  (Irwin--Hall) spline realises it in closed piecewise-polynomial form.
* ``e_kernel``: E_k(u) = u^k e^-u / k!, the Poisson-weight kernel used to
  localise the logarithmic-derivative series of an L-function around
  norms of size e^(k/r).

The *_check functions evaluate the two-sided estimates these kernels are
used with, returning per-point verdicts rather than asserting, so the
harness can map out exactly where each stated bound holds.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "WeightParams",
    "e_kernel",
    "e_kernel_bound_check",
    "e_kernel_partial_sum",
    "psi_mellin",
    "psi_mellin_bounds_check",
    "psi_weight",
    "psi_weight_vec",
]

# Explicit constant for the uniform boundedness of the Mellin transform on
# the strip |Re s| <= A / sqrt(2 n).  The supremum is attained on the real
# axis at |s| = A/sqrt(2n) and increases to e^(1/6) = 1.18136... with n.
MELLIN_STRIP_BOUND = 1.19

# Comparison fuzz for the boolean bound checks (pure rounding allowance).
_CHECK_RTOL = 1e-12


@dataclass(frozen=True)
class WeightParams:
    """Parameters of the smoothing weight.

    ``scale_A`` is derived as height_T * sqrt(2 * degree_n); passing it
    explicitly is allowed but it must agree with the derived value to 1 ulp.
    """

    degree_n: int
    height_T: float
    scale_A: float = 0.0

    def __post_init__(self) -> None:
        if self.degree_n < 1:
            raise ValueError("degree_n must be a positive integer")
        if self.height_T < 1.0:
            raise ValueError("height_T must be >= 1")
        derived = self.height_T * math.sqrt(2.0 * self.degree_n)
        if self.scale_A == 0.0:
            object.__setattr__(self, "scale_A", derived)
        elif abs(self.scale_A - derived) > math.ulp(derived):
            raise ValueError("scale_A inconsistent with height_T * sqrt(2*degree_n)")
        if self.scale_A < math.sqrt(2.0) * (1.0 - 1e-15):
            raise ValueError("scale_A must be >= sqrt(2)")


def _irwin_hall_pdf(m: int, t: float) -> float:
    """Density of a sum of m independent U[0,1] variables at t."""
    if t <= 0.0 or t >= m:
        return 0.0
    acc = 0.0
    for j in range(int(t) + 1):
        acc += (-1.0) ** j * math.comb(m, j) * (t - j) ** (m - 1)
    return max(acc / math.factorial(m - 1), 0.0)


def psi_weight(x: float, p: WeightParams) -> float:
    """Evaluate the weight at x > 0.

    Vanishes outside e^(-2n/A) <= x <= e^(2n/A) and satisfies
    0 <= psi_weight(x) <= A/2, with the peak A/2 attained at x = 1 when
    degree_n = 1 (triangular density).
    """
    if x <= 0.0:
        raise ValueError("psi_weight requires x > 0")
    n, a = p.degree_n, p.scale_A
    u = math.log(x)
    if abs(u) >= 2.0 * n / a:
        return 0.0
    # Shift to the Irwin--Hall coordinate: sum of 2n uniforms on [-1/A, 1/A]
    # equals (2/A) * (IrwinHall(2n) - n).
    t = a * u / 2.0 + n
    return (a / 2.0) * _irwin_hall_pdf(2 * n, t)


def psi_weight_vec(x: np.ndarray, p: WeightParams) -> np.ndarray:
    """Vectorised psi_weight over a positive array."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("psi_weight requires x > 0")
    n, a = p.degree_n, p.scale_A
    u = np.log(x)
    t = a * u / 2.0 + n
    m = 2 * n
    out = np.zeros(x.shape)
    inside = (t > 0.0) & (t < m)
    ti = t[inside]
    acc = np.zeros(ti.shape)
    for j in range(m):
        acc += (-1.0) ** j * math.comb(m, j) * np.where(ti > j, ti - j, 0.0) ** (m - 1)
    out[inside] = np.maximum(acc / math.factorial(m - 1), 0.0) * (a / 2.0)
    return out


def _sinhc(u: complex) -> complex:
    """sinh(u)/u with a series branch near 0 to dodge cancellation."""
    if abs(u) < 1e-3:
        u2 = u * u
        return 1.0 + u2 / 6.0 * (1.0 + u2 / 20.0 * (1.0 + u2 / 42.0))
    return cmath.sinh(u) / u


def psi_mellin(s: complex, p: WeightParams) -> complex:
    """The Mellin transform [sinh(s/A)/(s/A)]^(2 degree_n); entire, =1 at s=0."""
    u = complex(s) / p.scale_A
    return _sinhc(u) ** (2 * p.degree_n)


def psi_mellin_bounds_check(s: complex, p: WeightParams) -> tuple[bool, bool | None, bool | None]:
    """Check the three stated envelope bounds for the Mellin transform at s.

    Returns a triple (decay bound, small-|s| bound, strip bound).  The second
    entry applies only for |s| <= A and the third only for
    |Re s| <= A/sqrt(2n); inapplicable entries are None.

    The first bound, (A/|s|)^(2n) e^(|Re s|/A), is checked *as stated* even
    though it fails at some real s with |s| > A (the exponent appears to need
    a factor 2n to majorise sinh there); callers should treat a False verdict
    as information about the stated inequality, not as an evaluation error.
    """
    s = complex(s)
    n, a = p.degree_n, p.scale_A
    value = abs(psi_mellin(s, p))
    sigma = abs(s.real)

    if s == 0:
        decay_ok = True
    else:
        decay_bound = (a / abs(s)) ** (2 * n) * math.exp(sigma / a)
        decay_ok = value <= decay_bound * (1.0 + _CHECK_RTOL)

    small_ok: bool | None = None
    if abs(s) <= a:
        small_bound = (1.0 + abs(s) ** 2 / (5.0 * a * a)) ** (2 * n)
        small_ok = value <= small_bound * (1.0 + _CHECK_RTOL)

    strip_ok: bool | None = None
    if sigma <= a / math.sqrt(2.0 * n):
        strip_ok = value <= MELLIN_STRIP_BOUND * (1.0 + _CHECK_RTOL)

    return decay_ok, small_ok, strip_ok


def e_kernel(u: float, k: int) -> float:
    """E_k(u) = u^k e^-u / k!, evaluated in log space (overflow-free in k).

    E_0(0) = 1 by the 0^0 convention; E_k(0) = 0 exactly for k >= 1.
    """
    if u < 0.0:
        raise ValueError("e_kernel requires u >= 0")
    if k < 0:
        raise ValueError("e_kernel requires k >= 0")
    if u == 0.0:
        return 1.0 if k == 0 else 0.0
    if k == 0:
        return math.exp(-u)
    return math.exp(k * math.log(u) - u - math.lgamma(k + 1))


def e_kernel_bound_check(k: int, eta: float, delta: float, u: float) -> bool | None:
    """Check the two-regime envelope for E_k at (u, k).

    Low regime u <= k/(e(1+eta)): is E_k(u) <= (1+eta)^-k?
    High regime u >= (2/(1-delta)) log(2(1+eta)/(1-delta)) k: is
    E_k(u) <= (1+eta)^-k e^(-delta u)?

    Returns None when u falls in neither regime (not applicable, which is
    distinct from a failing check).
    """
    if k < 1:
        raise ValueError("bound check requires k >= 1")
    if eta <= 0.0:
        raise ValueError("eta must be positive")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie in (0, 1)")
    if u < 0.0:
        raise ValueError("u must be >= 0")

    value = e_kernel(u, k)
    if u <= k / (math.e * (1.0 + eta)):
        bound = (1.0 + eta) ** (-k)
        return value <= bound * (1.0 + _CHECK_RTOL)
    high_threshold = (2.0 / (1.0 - delta)) * math.log(2.0 * (1.0 + eta) / (1.0 - delta)) * k
    if u >= high_threshold:
        bound = (1.0 + eta) ** (-k) * math.exp(-delta * u)
        return value <= bound * (1.0 + _CHECK_RTOL)
    return None


def e_kernel_partial_sum(u: float, k_max: int) -> float:
    """sum_{k=0}^{k_max} E_k(u); increases to 1 as k_max grows."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    return math.fsum(e_kernel(u, k) for k in range(k_max + 1))
