"""
Special functions used by the coefficient formulas and the heat kernels
"""

import numpy as np
from scipy import special

from src.errors import DomainError

SQRT_PI = float(np.sqrt(np.pi))

# Gaussian tails are exactly zero past this point
TAIL_UNDERFLOW_Z = 30.0


def gamma_fn(x):
    """
    Gamma function for positive arguments

    Args:
        x (float): Argument, must be > 0

    Returns:
        float: Gamma(x)
    """
    if not x > 0:
        raise DomainError(f"gamma_fn requires x > 0, got {x}")
    return float(special.gamma(x))


def gaussian_tail(z):
    """
    Vectorized tail integral of exp(-eta^2) from z to infinity

    Args:
        z (array_like): Lower limits

    Returns:
        numpy.ndarray: (sqrt(pi)/2) * erfc(z), zero where z > 30
    """
    z = np.asarray(z, dtype=float)
    tail = 0.5 * SQRT_PI * special.erfc(z)
    return np.where(z > TAIL_UNDERFLOW_Z, 0.0, tail)


def erfc_scaled_tail(z):
    """
    Integral of exp(-eta^2) over [z, infinity)

    Args:
        z (float): Lower limit, any real number

    Returns:
        float: (sqrt(pi)/2) * erfc(z); exactly 0 beyond z = 30
    """
    return float(gaussian_tail(z))
