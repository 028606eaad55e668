"""
Special functions, adaptive quadrature and the closed-form integrals used by the
coefficient formulas
"""

from src.numerics.integrals import i_k_integral, j_integral
from src.numerics.quadrature import QuadratureResult, adaptive_integrate, gauss_legendre
from src.numerics.special import SQRT_PI, erfc_scaled_tail, gamma_fn, gaussian_tail

__all__ = [
    "QuadratureResult",
    "SQRT_PI",
    "adaptive_integrate",
    "erfc_scaled_tail",
    "gamma_fn",
    "gauss_legendre",
    "gaussian_tail",
    "i_k_integral",
    "j_integral",
]
