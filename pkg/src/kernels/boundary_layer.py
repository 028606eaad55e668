"""
Boundary-layer evaluation of Z_(k,2)(t) for smooth planar domains
"""

import logging
import math

import numpy as np

from src.errors import DomainError, ReachError, UnsupportedError
from src.geometry.bodies import PlanarCurveDomain, integrate_over_parameter
from src.geometry.functionals import reach, volume
from src.numerics.quadrature import adaptive_integrate
from src.numerics.special import gaussian_tail

logger = logging.getLogger(__name__)

# in units of sqrt(t); the layer integrand is below exp(-92) past this depth
LAYER_DEPTH_Z = 9.6
EPS_RANGE = (0.4, 0.5)


def _layer_profile(kappa, k, root_t, z_max, tol):
    """sqrt(t) int_0^z_max {exp(-z^2) + kappa sqrt(t) z^2 T(z)}^k (1 - sqrt(t) z kappa) dz"""

    def integrand(z):
        bracket = np.exp(-z * z) + kappa * root_t * z * z * gaussian_tail(z)
        return bracket ** k * (1.0 - root_t * z * kappa)

    return root_t * adaptive_integrate(integrand, 0.0, z_max, tol=tol).value


def layer_cutoff(body, t, eps_exponent=None):
    """
    Depth of the boundary layer integrated by z_k2_boundary_layer

    Args:
        body (PlanarCurveDomain): The domain
        t (float): Time, > 0
        eps_exponent (float, optional): Use t^eps instead of half the reach

    Returns:
        float: Cutoff distance from the boundary

    Raises:
        ReachError: If the layer would leave the tubular neighbourhood
    """
    width = reach(body)
    if eps_exponent is None:
        cutoff = 0.5 * width
        if cutoff < LAYER_DEPTH_Z * math.sqrt(t):
            raise ReachError(
                f"t={t:g} is too large: the layer needs depth {LAYER_DEPTH_Z * math.sqrt(t):.4g} "
                f"but half the reach is {cutoff:.4g}"
            )
        return cutoff
    if not EPS_RANGE[0] < eps_exponent < EPS_RANGE[1]:
        raise DomainError(f"eps_exponent must lie in (2/5, 1/2), got {eps_exponent}")
    cutoff = t ** eps_exponent
    if cutoff >= width:
        raise ReachError(f"t^eps = {cutoff:.4g} exceeds the reach {width:.4g}")
    return cutoff


def z_k2_boundary_layer(body, k, t, eps_exponent=None, tol=1e-13):
    """
    Deterministic value of Z_(k,2)(t) from the boundary-layer kernel expansion

    |D| + int_dD ds int_0^cut dr {exp(-r^2/t) + kappa r^2 t^(-1/2) T(r/sqrt t)}^k
    (1 - r kappa), with kappa the curvature for the inward normal. The cutoff is
    half the reach unless eps_exponent selects t^eps.

    Args:
        body (PlanarCurveDomain): Smooth bounded planar domain
        k (int): Number of bridges, >= 1
        t (float): Time, > 0
        eps_exponent (float, optional): Exponent in (2/5, 1/2) for a t^eps cutoff
        tol (float): Tolerance of the inner quadrature

    Returns:
        float: Z_(k,2)(t) up to the O(1) remainder of the kernel expansion
    """
    if not isinstance(body, PlanarCurveDomain):
        raise UnsupportedError("z_k2_boundary_layer needs a PlanarCurveDomain")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if not t > 0:
        raise DomainError(f"time must be positive, got {t}")

    root_t = math.sqrt(t)
    z_max = min(layer_cutoff(body, t, eps_exponent) / root_t, LAYER_DEPTH_Z)
    profiles = {}

    def profile(kappa):
        if kappa not in profiles:
            profiles[kappa] = _layer_profile(kappa, k, root_t, z_max, tol)
        return profiles[kappa]

    def along_boundary(s):
        kappas = np.atleast_1d(body.inward_curvature(s)) * np.ones_like(s)
        values = np.array([profile(float(value)) for value in kappas])
        return body.speed(s) * values

    layer = integrate_over_parameter(along_boundary, body.period)
    logger.debug("z_k2 %s k=%d t=%g: %d inner profiles", body.name, k, t, len(profiles))
    return volume(body) + layer
