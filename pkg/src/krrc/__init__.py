"""Kirillov-Reshetikhin crystals of type D, rigged configurations, and the
statistics preserving bijection between them.

The public surface mirrors the module layout:

- :mod:`krrc.roots` -- weights and roots of the type D root system, stored
  in doubled orthogonal coordinates so that spin weights stay integral.
- :mod:`krrc.crystals` -- Kashiwara-Nakashima tableaux, spin columns, and
  tensor products with the classical crystal operators.
- :mod:`krrc.kr` -- the affine operators, the automorphism sigma, and
  enumeration of full crystals and of classically highest elements.
- :mod:`krrc.rigged` -- rigged configurations: vacancy numbers, cocharge,
  the complement involution theta, operators, and enumeration.
- :mod:`krrc.bijection` -- the elementary moves delta, beta, gamma and
  their spin variants, and the bijection between tensor products and
  rigged configurations built from them.
- :mod:`krrc.energy` -- the combinatorial R-matrix, local and intrinsic
  energy, and the index reversal varsigma.
- :mod:`krrc.xm` -- graded generating functions over paths and over
  configurations, and their comparison.
"""

from .bijection import path_to_rc, phi_map, phi_inverse_map, rc_to_path
from .crystals import KRElement, TensorElement
from .energy import apply_r, intrinsic_energy, local_energy, reorder, varsigma
from .kr import apply_e, apply_f, sigma, tensor_elements, tensor_highest
from .rigged import RC, cocharge, rigged_configurations, theta
from .xm import compare, m_polynomial, x_polynomial

__all__ = [
    "KRElement",
    "TensorElement",
    "RC",
    "apply_e",
    "apply_f",
    "apply_r",
    "cocharge",
    "compare",
    "intrinsic_energy",
    "local_energy",
    "m_polynomial",
    "path_to_rc",
    "phi_map",
    "phi_inverse_map",
    "rc_to_path",
    "reorder",
    "rigged_configurations",
    "sigma",
    "tensor_elements",
    "tensor_highest",
    "theta",
    "varsigma",
    "x_polynomial",
]

__version__ = "0.1.0"
