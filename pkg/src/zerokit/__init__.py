"""Rigorous-numerics toolkit for explicit zero-density and zero-repulsion
constants of L-functions.

The package has three layers:

* constant certification (`zerokit.constants`, `zerokit.errorbounded`,
  `zerokit.powersum`, `zerokit.kernels`): re-derives every explicit constant
  of the detection / repulsion pipeline with certified error radii and
  compares against the published targets;
* a desk-scale Dirichlet L-function engine (`zerokit.dirichlet`): character
  enumeration, Hurwitz-zeta based evaluation, completed L-functions, zero
  location certified by the argument principle, and the arithmetic prime
  sums that feed the inequalities;
* an empirical verification harness (`zerokit.verify`) and a command line
  front end (`zerokit.cli`).
"""

from zerokit.errorbounded import ErrorBounded
from zerokit.powersum import ComplexSeq, PowerSumWitness, ks_ratio, ks_witness, lmo_witness, power_sum
from zerokit.kernels import WeightParams, e_kernel, e_kernel_bound_check, psi_mellin, psi_mellin_bounds_check, psi_weight

__all__ = [
    "ComplexSeq",
    "ErrorBounded",
    "PowerSumWitness",
    "WeightParams",
    "e_kernel",
    "e_kernel_bound_check",
    "ks_ratio",
    "ks_witness",
    "lmo_witness",
    "power_sum",
    "psi_mellin",
    "psi_mellin_bounds_check",
    "psi_weight",
]

__version__ = "0.1.0"
