"""
Brownian bridges and free Brownian motions for the generator Laplacian

Increments over a time step ds have per-coordinate variance 2 ds, so the
transition density is (4 pi s)^(-m/2) exp(-|x|^2 / (4s)).
"""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import DomainError


class PathPolyline(BaseModel):
    """
    Discretized path on a uniform time grid

    times has steps + 1 entries from 0 to t; points has shape (steps + 1, dim) and
    starts at the origin. A pinned path also ends at the origin.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dim: int = Field(ge=1)
    times: np.ndarray
    points: np.ndarray
    pinned: bool

    @property
    def steps(self):
        return len(self.times) - 1

    @property
    def t(self):
        return float(self.times[-1])

    @property
    def max_norm(self):
        return float(np.max(np.linalg.norm(self.points, axis=1)))

    @model_validator(mode="after")
    def _check_path(self):
        if self.points.shape != (len(self.times), self.dim):
            raise ValueError(f"points must have shape ({len(self.times)}, {self.dim})")
        if self.times[0] != 0.0 or np.any(np.diff(self.times) <= 0):
            raise ValueError("times must increase from 0")
        if np.any(self.points[0] != 0.0):
            raise ValueError("path must start at the origin")
        if self.pinned and np.any(self.points[-1] != 0.0):
            raise ValueError("pinned path must end at the origin")
        return self


def path_stream(seed, replica, path):
    """
    Independent random stream for one path of one replica

    Args:
        seed (int): Run seed
        replica (int): Replica index
        path (int): Path index within the replica

    Returns:
        numpy.random.Generator: Philox generator keyed by (seed, replica, path)
    """
    sequence = np.random.SeedSequence(seed, spawn_key=(replica, path))
    return np.random.Generator(np.random.Philox(sequence))


def _check_grid(t, steps, minimum):
    if not t > 0:
        raise DomainError(f"time must be positive, got {t}")
    if steps < minimum:
        raise DomainError(f"need at least {minimum} steps, got {steps}")


def motion_array(m, t, steps, count, rng):
    """
    Sample free motions as an array

    Args:
        m (int): Dimension
        t (float): Final time
        steps (int): Segments per path
        count (int): Number of paths
        rng (numpy.random.Generator): Random stream

    Returns:
        numpy.ndarray: Shape (count, steps + 1, m), starting at the origin
    """
    _check_grid(t, steps, 1)
    increments = rng.normal(scale=math.sqrt(2.0 * t / steps), size=(count, steps, m))
    paths = np.zeros((count, steps + 1, m))
    np.cumsum(increments, axis=1, out=paths[:, 1:, :])
    return paths


def bridge_array(m, t, steps, count, rng):
    """
    Sample bridges pinned at the origin as W(s) - (s/t) W(t)

    Args:
        m (int): Dimension
        t (float): Final time
        steps (int): Segments per path
        count (int): Number of paths
        rng (numpy.random.Generator): Random stream

    Returns:
        numpy.ndarray: Shape (count, steps + 1, m), zero at both ends
    """
    _check_grid(t, steps, 2)
    paths = motion_array(m, t, steps, count, rng)
    fraction = np.linspace(0.0, 1.0, steps + 1)[None, :, None]
    paths -= fraction * paths[:, -1:, :]
    paths[:, -1, :] = 0.0
    return paths


def sample_motion(m, t, steps, rng):
    """Free Brownian path from the origin on a uniform grid"""
    points = motion_array(m, t, steps, 1, rng)[0]
    return PathPolyline(dim=m, times=np.linspace(0.0, t, steps + 1), points=points, pinned=False)


def sample_bridge(m, t, steps, rng):
    """Brownian bridge from the origin back to the origin at time t"""
    points = bridge_array(m, t, steps, 1, rng)[0]
    return PathPolyline(dim=m, times=np.linspace(0.0, t, steps + 1), points=points, pinned=True)
