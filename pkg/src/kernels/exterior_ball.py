"""
Heat content of the exterior of the unit ball in R^3 and its k-th power norms
"""

import logging
import math

import numpy as np
import pandas as pd
from scipy import special

from src.errors import DomainError
from src.numerics.quadrature import QuadratureResult, adaptive_integrate

logger = logging.getLogger(__name__)

# erfc(9.6) < 1e-41: the radial integral stops at r = 1 + 2 sqrt(t) * 9.6
RADIAL_CUTOFF_Z = 9.6


def u_exterior_ball(r, t):
    """
    Temperature outside the unit ball held at 1 from time 0

    Args:
        r (float or array): Distance from the centre, >= 1
        t (float): Time, > 0

    Returns:
        float or numpy.ndarray: erfc((r - 1) / (2 sqrt t)) / r
    """
    if not t > 0:
        raise DomainError(f"time must be positive, got {t}")
    r = np.asarray(r, dtype=float)
    if np.any(r < 1.0):
        raise DomainError("u_exterior_ball is defined for r >= 1 (u = 1 inside the obstacle)")
    return special.erfc((r - 1.0) / (2.0 * math.sqrt(t))) / r


def q_k3_exact(k, t, tol=1e-13):
    """
    Expected volume of the intersection of k unpinned sausages of the unit ball in R^3

    Q_(k,3)(t) = 4pi/3 + 4pi int_1^inf r^2 u(r, t)^k dr, evaluated by adaptive
    quadrature after r = 1 + 2 sqrt(t) z.

    Args:
        k (int): Number of sausages, >= 1
        t (float): Time, > 0
        tol (float): Quadrature tolerance

    Returns:
        QuadratureResult: Q_(k,3)(t) with its error estimate
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if not t > 0:
        raise DomainError(f"time must be positive, got {t}")
    width = 2.0 * math.sqrt(t)

    def integrand(z):
        return (1.0 + width * z) ** (2 - k) * special.erfc(z) ** k

    layer = adaptive_integrate(integrand, 0.0, RADIAL_CUTOFF_Z, tol=tol)
    scale = 4.0 * math.pi * width
    truncation = scale * (1.0 + width * (RADIAL_CUTOFF_Z + 1.0)) ** 2 * special.erfc(RADIAL_CUTOFF_Z)
    return QuadratureResult(
        value=4.0 * math.pi / 3.0 + scale * layer.value,
        error_estimate=scale * layer.error_estimate + truncation,
        evaluations=layer.evaluations,
    )


def q1_ball_closed_form(t, r=1.0):
    """
    Expected volume of one unpinned sausage of a ball of radius r in R^3

    Args:
        t (float): Time, > 0
        r (float): Radius of the ball

    Returns:
        float: 4 pi r^3/3 + 8 r^2 sqrt(pi t) + 4 pi r t
    """
    if not t > 0:
        raise DomainError(f"time must be positive, got {t}")
    return 4.0 * math.pi * r ** 3 / 3.0 + 8.0 * r * r * math.sqrt(math.pi * t) + 4.0 * math.pi * r * t


def q_table(k, t_grid, tol=1e-13):
    """
    Tabulate Q_(k,3) on a time grid

    Args:
        k (int): Number of sausages
        t_grid (iterable): Times
        tol (float): Quadrature tolerance

    Returns:
        pandas.DataFrame: Columns t, value, error_estimate
    """
    rows = []
    for t in t_grid:
        result = q_k3_exact(k, t, tol=tol)
        rows.append({'t': t, 'value': result.value, 'error_estimate': result.error_estimate})
    logger.info("tabulated Q_(%d,3) at %d times", k, len(rows))
    return pd.DataFrame(rows, columns=['t', 'value', 'error_estimate'])
