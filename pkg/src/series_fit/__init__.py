"""
Least-squares extraction of half-power series coefficients and empirical
remainder-order checks
"""

from src.series_fit.fit import FitResult, OrderCheck, fit_halfpowers, order_check, sample_arrays
from src.series_fit.samples import load_samples

__all__ = [
    "FitResult",
    "OrderCheck",
    "fit_halfpowers",
    "load_samples",
    "order_check",
    "sample_arrays",
]
