"""
Coverage of points by the Wiener sausage of a ball
"""

from enum import Enum

import numpy as np

from src.errors import UnsupportedError
from src.geometry.bodies import Ball

# points x segments handled per block
BLOCK_SIZE = 2 ** 18


class BiasMode(str, Enum):
    POLYLINE = "polyline"
    BRIDGE_CORRECTED = "bridge_corrected"


def _segment_distances(x, points):
    """Distances from each x to every segment of the polyline, shape (n, steps)"""
    start = points[:-1]
    direction = points[1:] - points[:-1]
    length2 = np.einsum("ij,ij->i", direction, direction)
    offset = x[:, None, :] - start[None, :, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        along = np.einsum("nij,ij->ni", offset, direction) / length2
    along = np.clip(np.nan_to_num(along, nan=0.0), 0.0, 1.0)
    nearest = offset - along[:, :, None] * direction[None, :, :]
    return np.sqrt(np.einsum("nij,nij->ni", nearest, nearest))


def coverage(x, points, radius, dt, mode):
    """
    Probability that the sausage of one path covers each point

    polyline: 1 where some segment comes within radius of x, else 0.
    bridge_corrected: segments that stay outside contribute the half-space
    crossing probability exp(-d_a d_b / dt) of a bridge with variance 2 dt, where
    d_a, d_b are the endpoint distances to the sphere of radius r about x; the
    path probability is 1 - prod(1 - p).

    Args:
        x (numpy.ndarray): Points, shape (n, m)
        points (numpy.ndarray): Path vertices, shape (steps + 1, m)
        radius (float): Ball radius
        dt (float): Time step of the path
        mode (BiasMode): Coverage rule

    Returns:
        numpy.ndarray: Coverage probability per point
    """
    mode = BiasMode(mode)
    x = np.atleast_2d(np.asarray(x, dtype=float))
    steps = len(points) - 1
    block = max(1, BLOCK_SIZE // max(steps, 1))
    result = np.empty(len(x))
    for lo in range(0, len(x), block):
        chunk = x[lo:lo + block]
        hit = (_segment_distances(chunk, points) <= radius).any(axis=1)
        if mode is BiasMode.POLYLINE:
            result[lo:lo + block] = hit
            continue
        gap = np.linalg.norm(chunk[:, None, :] - points[None, :, :], axis=2) - radius
        gap = np.maximum(gap, 0.0)
        crossing = np.exp(-gap[:, :-1] * gap[:, 1:] / dt)
        with np.errstate(divide="ignore"):
            miss = np.exp(np.sum(np.log1p(-np.minimum(crossing, 1.0)), axis=1))
        result[lo:lo + block] = np.where(hit, 1.0, 1.0 - miss)
    return result


def sausage_covers(path, body, x, bias_mode=BiasMode.POLYLINE):
    """
    Whether the Wiener sausage {B(s) + y : y in K} of a ball K contains x

    Args:
        path (PathPolyline): Sampled path
        body (Ball): Ball centred at the origin
        x (array-like): Point in R^m
        bias_mode (BiasMode): polyline for an indicator, bridge_corrected for a
            probability

    Returns:
        bool or float: Indicator (polyline) or coverage probability
    """
    if not isinstance(body, Ball):
        raise UnsupportedError("sausage coverage is implemented for balls only")
    mode = BiasMode(bias_mode)
    dt = path.t / path.steps
    value = coverage(np.asarray(x, dtype=float)[None, :], path.points, body.r, dt, mode)[0]
    if mode is BiasMode.POLYLINE:
        return bool(value)
    return float(min(max(value, 0.0), 1.0))
