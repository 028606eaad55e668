"""
Exact evaluation of the asymptotic coefficient families (alpha, c, a, b), the
binomial transform between c and a, and the series-power algebra of the
interior terms
"""

from src.coefficients.boundary import (
    Normalization,
    a_coeff,
    alpha_coeff,
    alpha_coeff_exact,
    b_coeff,
    b_coeff_both,
    b_discrepancy,
    boundary_curvature_weight,
    c2_curvature_weight,
    c_coeff,
    coefficient_series,
    harmonic_identity_check,
)
from src.coefficients.export import coefficient_table, export_coefficients
from src.coefficients.interior import InteriorData, InteriorTerm, interior_a, interior_term
from src.coefficients.series import (
    CoefficientFamily,
    SeriesCoeffs,
    alternating_binomial_sum,
    series_power_diag,
    transform_1d,
    transform_family,
)

__all__ = [
    "CoefficientFamily",
    "InteriorData",
    "InteriorTerm",
    "Normalization",
    "SeriesCoeffs",
    "a_coeff",
    "alpha_coeff",
    "alpha_coeff_exact",
    "alternating_binomial_sum",
    "b_coeff",
    "b_coeff_both",
    "b_discrepancy",
    "boundary_curvature_weight",
    "c2_curvature_weight",
    "c_coeff",
    "coefficient_series",
    "coefficient_table",
    "export_coefficients",
    "harmonic_identity_check",
    "interior_a",
    "interior_term",
    "series_power_diag",
    "transform_1d",
    "transform_family",
]
