"""Exact nonsymmetric Macdonald polynomials, Cauchy kernels and their checks."""

__version__ = "0.1.0"

from .qt_field import SYMBOLIC, EvalField, QTPoly, QTRat, mono, q, qpoch, qt_invert_params, t
from .laurent import LPoly, lp_div_diff
from .hecke import apply_H, apply_H_inv, apply_M, apply_omega
from .weights import (
    c_lambda,
    coeff_a,
    coeff_b,
    coeff_f,
    diagram_stats,
    norm_closed_form,
    preceq_compare,
    special_values,
    spectral_vector,
)
from .macdonald import compute_E, compute_E_inverted, compute_P, lower_basis, orbit_step
from .kernel import check_functional, decompose_EE, decompose_PP, expand_kernel, qbinomial_series
from .cherednik import reproducing_check, scalar_product, weight_poly

__all__ = [
    "SYMBOLIC", "EvalField", "QTPoly", "QTRat", "mono", "q", "t", "qpoch", "qt_invert_params",
    "LPoly", "lp_div_diff",
    "apply_H", "apply_H_inv", "apply_M", "apply_omega",
    "c_lambda", "coeff_a", "coeff_b", "coeff_f", "diagram_stats", "norm_closed_form",
    "preceq_compare", "special_values", "spectral_vector",
    "compute_E", "compute_E_inverted", "compute_P", "lower_basis", "orbit_step",
    "check_functional", "decompose_EE", "decompose_PP", "expand_kernel", "qbinomial_series",
    "reproducing_check", "scalar_product", "weight_poly",
]
