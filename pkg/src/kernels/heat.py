"""
Free, half-line and planar boundary-layer heat kernels on the diagonal
"""

import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, Field

from src.coefficients.boundary import alpha_coeff
from src.errors import DomainError
from src.numerics.quadrature import adaptive_integrate
from src.numerics.special import gaussian_tail

# the half-line integral is split where the Dirichlet factor has relaxed
HALFLINE_SPLIT = 10.0


class Regime(str, Enum):
    EXACT = "exact"
    EXPANSION = "expansion"


class KernelEval(BaseModel):
    """Diagonal kernel value and whether it is exact or an expansion"""
    value: float = Field(ge=0.0)
    regime: Regime


def _check_time(t):
    if not t > 0:
        raise DomainError(f"time must be positive, got {t}")


def p_free(m, d2, t):
    """
    Heat kernel of R^m for the generator Laplacian

    Args:
        m (int): Dimension
        d2 (float or array): Squared distance |x - y|^2
        t (float): Time, > 0

    Returns:
        float or numpy.ndarray: (4 pi t)^(-m/2) exp(-d2 / (4t))
    """
    _check_time(t)
    return (4.0 * math.pi * t) ** (-m / 2.0) * np.exp(-np.asarray(d2, dtype=float) / (4.0 * t))


def p_halfline_diag(x, t):
    """
    Dirichlet heat kernel of the half line on the diagonal

    Args:
        x (float or array): Distance to the boundary point 0, >= 0
        t (float): Time, > 0

    Returns:
        float or numpy.ndarray: (4 pi t)^(-1/2) (1 - exp(-x^2 / t))
    """
    _check_time(t)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("half-line kernel needs x >= 0")
    return (4.0 * math.pi * t) ** -0.5 * -np.expm1(-x * x / t)


def halfline_norm(k, f, t, tol=1e-12):
    """
    Integral of p_(R+)(x, x; t)^k f(x) over the half line

    Args:
        k (int): Power of the kernel, >= 1
        f (callable): Vectorized weight function
        t (float): Time, > 0
        tol (float): Quadrature tolerance

    Returns:
        float: The weighted kernel norm
    """
    _check_time(t)

    def integrand(x):
        return (-np.expm1(-x * x / t)) ** k * f(x)

    split = HALFLINE_SPLIT * math.sqrt(t)
    near = adaptive_integrate(integrand, 0.0, split, tol=tol)
    far = adaptive_integrate(integrand, split, np.inf, tol=tol)
    return (4.0 * math.pi * t) ** (-k / 2.0) * (near.value + far.value)


def halfline_series(k, f_integral, derivatives, t):
    """
    Small-time series of the half-line kernel norm

    (4 pi t)^(-k/2) {int f + sum_j t^(j/2) f^(j-1)(0) alpha_(k,j)}, with one term
    per supplied derivative.

    Args:
        k (int): Power of the kernel
        f_integral (float): Integral of f over the half line
        derivatives (list): f(0), f'(0), f''(0), ...
        t (float): Time, > 0

    Returns:
        float: Partial sum of the series
    """
    _check_time(t)
    total = f_integral
    for j, derivative in enumerate(derivatives, start=1):
        total += t ** (j / 2.0) * derivative * alpha_coeff(k, j)
    return (4.0 * math.pi * t) ** (-k / 2.0) * total


def p_planar_expansion_diag(delta, kappa, t):
    """
    Boundary-layer expansion of a planar Dirichlet kernel on the diagonal

    (4 pi t)^(-1) {1 - exp(-delta^2/t) - kappa delta^2 t^(-1/2) T(delta/sqrt t)}
    with T the Gaussian tail, kappa the curvature for the inward normal. The O(1)
    remainder is not included.

    Args:
        delta (float or array): Distance to the boundary, > 0
        kappa (float): Boundary curvature at the nearest point
        t (float): Time, > 0

    Returns:
        float or numpy.ndarray: Expanded kernel value
    """
    _check_time(t)
    delta = np.asarray(delta, dtype=float)
    root = math.sqrt(t)
    bracket = -np.expm1(-delta * delta / t) - kappa * delta * delta / root * gaussian_tail(delta / root)
    return bracket / (4.0 * math.pi * t)


def diag_kernel_eval(delta, t, kappa=None):
    """
    Diagonal Dirichlet kernel near a boundary

    Without a curvature this is the exact half-plane kernel; with one it is the
    planar boundary-layer expansion.

    Args:
        delta (float): Distance to the boundary
        t (float): Time, > 0
        kappa (float, optional): Boundary curvature (inward normal)

    Returns:
        KernelEval: Value and regime

    Raises:
        DomainError: If the expansion is negative, i.e. kappa * sqrt(t) is too
            large for the boundary-layer regime
    """
    if kappa is None:
        value = float(p_halfline_diag(delta, t)) * (4.0 * math.pi * t) ** -0.5
        return KernelEval(value=value, regime=Regime.EXACT)
    value = float(p_planar_expansion_diag(delta, kappa, t))
    if value < 0.0:
        raise DomainError(
            f"boundary-layer expansion is negative at delta={delta:g}, t={t:g}, "
            f"kappa*sqrt(t)={kappa * math.sqrt(t):g}; outside the expansion regime"
        )
    return KernelEval(value=value, regime=Regime.EXPANSION)
