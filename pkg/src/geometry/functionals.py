"""
Geometric functionals of compact bodies: volume, boundary measure, total curvature
and the packaged boundary integrals consumed by the heat-kernel coefficients
"""

import logging
import math

import numpy as np
from pydantic import BaseModel

from src.errors import UnsupportedError
from src.geometry.bodies import Ball, Orientation, PlanarCurveDomain, integrate_over_parameter
from src.numerics.special import gamma_fn

logger = logging.getLogger(__name__)

REACH_SAMPLES = 1024


class GeomFunctionals(BaseModel):
    """
    Integrated geometric data for a weight function f

    vol_f = int_M f dx, vol_ftau = int_M f tau dx, bdy_f = int_dM f dy,
    bdy_f1 = int_dM f^(1) dy (inward normal derivative), bdy_fL = int_dM f L_aa dy.
    """
    vol_f: float
    vol_ftau: float = 0.0
    bdy_f: float
    bdy_f1: float = 0.0
    bdy_fL: float


def unit_ball_volume(m):
    """Volume omega_m of the unit ball in R^m"""
    return math.pi ** (m / 2.0) / gamma_fn(m / 2.0 + 1.0)


def volume(body):
    """
    Volume |K| of a body

    Args:
        body (CompactBody): Ball or planar curve domain

    Returns:
        float: omega_m r^m for a ball, the enclosed area for a planar domain
    """
    if isinstance(body, Ball):
        return unit_ball_volume(body.m) * body.r ** body.m
    if isinstance(body, PlanarCurveDomain):
        return abs(body.signed_area)
    raise UnsupportedError(f"unsupported body {type(body).__name__}")


def surface_measure(body):
    """
    Boundary measure |dK|

    Args:
        body (CompactBody): Ball or planar curve domain

    Returns:
        float: m omega_m r^(m-1) for a ball, the arclength for a planar domain
    """
    if isinstance(body, Ball):
        return body.m * unit_ball_volume(body.m) * body.r ** (body.m - 1)
    if isinstance(body, PlanarCurveDomain):
        return body.arclength
    raise UnsupportedError(f"unsupported body {type(body).__name__}")


def total_curvature(body, orientation=Orientation.INWARD):
    """
    Integral of L_aa over the boundary

    Args:
        body (CompactBody): Ball or planar curve domain
        orientation (Orientation): Normal used for L_aa; OUTWARD negates the result

    Returns:
        float: Total curvature with the requested orientation
    """
    orientation = Orientation(orientation)
    if isinstance(body, Ball):
        value = (body.m - 1) / body.r * surface_measure(body)
    elif isinstance(body, PlanarCurveDomain):
        value = body.traversal_sign * _curve_integral(body, body.kappa)
    else:
        raise UnsupportedError(f"unsupported body {type(body).__name__}")
    return orientation.sign * value


def _curve_integral(body, func):
    return integrate_over_parameter(lambda s: func(s) * body.speed(s), body.period)


def functionals_constant_f(body, f0, orientation=Orientation.INWARD):
    """
    Geometric functionals for the constant weight f = f0 in flat space

    Args:
        body (CompactBody): Ball or planar curve domain
        f0 (float): Constant value of f
        orientation (Orientation): Normal used for L_aa

    Returns:
        GeomFunctionals: (f0|K|, 0, f0|dK|, 0, f0 * total curvature)
    """
    return GeomFunctionals(
        vol_f=f0 * volume(body),
        vol_ftau=0.0,
        bdy_f=f0 * surface_measure(body),
        bdy_f1=0.0,
        bdy_fL=f0 * total_curvature(body, orientation),
    )


def reach(body, samples=REACH_SAMPLES):
    """
    Interior reach of the boundary

    For a planar domain this is the smallest radius of the maximal inscribed disk
    tangent at a boundary sample, min_j |p_j - p_i|^2 / (2 (p_j - p_i) . n_i) over
    pairs facing the inward normal n_i.

    Args:
        body (CompactBody): Ball or planar curve domain
        samples (int): Boundary samples for a planar domain

    Returns:
        float: Reach of the boundary towards the interior
    """
    if isinstance(body, Ball):
        return body.r
    if not isinstance(body, PlanarCurveDomain):
        raise UnsupportedError(f"unsupported body {type(body).__name__}")

    s = np.linspace(0.0, body.period, samples, endpoint=False)
    p = body.points(s)
    n = body.inward_normal(s)
    diff = p[None, :, :] - p[:, None, :]
    along = np.einsum("ijk,ik->ij", diff, n)
    dist2 = np.einsum("ijk,ijk->ij", diff, diff)
    with np.errstate(divide="ignore", invalid="ignore"):
        radius = np.where(along > 1e-14, dist2 / (2.0 * along), np.inf)
    value = float(np.min(radius))
    logger.debug("reach of %s: %.6g", body.name, value)
    return value
