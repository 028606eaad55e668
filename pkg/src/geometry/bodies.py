"""
Compact bodies: balls in R^m and smooth planar domains bounded by a closed curve
"""

import math
from enum import Enum
from typing import Callable, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.numerics.quadrature import gauss_legendre_panels

CURVE_TOLERANCE = 1e-10
CURVE_MAX_PANELS = 2 ** 14
TOTAL_CURVATURE_TOLERANCE = 1e-8


class Orientation(str, Enum):
    """
    Choice of unit normal along the boundary

    INWARD points into the body (the domain whose kernel is studied for a planar
    domain D); OUTWARD points into the complement. A ball has positive L_aa
    for INWARD.
    """
    INWARD = "inward"
    OUTWARD = "outward"

    @property
    def sign(self):
        return 1.0 if self is Orientation.INWARD else -1.0


class Ball(BaseModel):
    """Closed ball of radius r centred at the origin of R^m"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["ball"] = "ball"
    m: int = Field(ge=1)
    r: float = Field(gt=0.0)


def integrate_over_parameter(func, period):
    """
    Integrate a smooth periodic function over one period

    Composite Gauss-Legendre panels are doubled until two successive results
    differ by less than 1e-10 (relative to max(1, |value|)).

    Args:
        func (callable): Vectorized function of the curve parameter
        period (float): Parameter period

    Returns:
        float: Integral over [0, period]
    """
    panels = 4
    previous = None
    while panels <= CURVE_MAX_PANELS:
        nodes, weights = gauss_legendre_panels(np.linspace(0.0, period, panels + 1), 8)
        value = float(np.dot(weights, func(nodes)))
        if previous is not None and abs(value - previous) < CURVE_TOLERANCE * max(1.0, abs(value)):
            return value
        previous = value
        panels *= 2
    return previous


class PlanarCurveDomain(BaseModel):
    """
    Bounded planar domain enclosed by a smooth simple closed curve

    The curve is s -> (x(s), y(s)) on [0, period). kappa(s) is the signed curvature
    relative to the left-hand normal of the traversal direction, so a circle run
    counter-clockwise has kappa = 1/r. Both traversal directions are accepted.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["planar"] = "planar"
    name: str = "curve"
    period: float = Field(gt=0.0)
    x: Callable
    y: Callable
    dx: Callable
    dy: Callable
    kappa: Callable
    curvature_tolerance: float = TOTAL_CURVATURE_TOLERANCE

    def speed(self, s):
        return np.hypot(self.dx(s), self.dy(s))

    @property
    def arclength(self):
        return integrate_over_parameter(self.speed, self.period)

    @property
    def signed_area(self):
        return integrate_over_parameter(
            lambda s: 0.5 * (self.x(s) * self.dy(s) - self.y(s) * self.dx(s)), self.period
        )

    @property
    def traversal_sign(self):
        """+1 for counter-clockwise traversal, -1 for clockwise"""
        return 1.0 if self.signed_area > 0 else -1.0

    def inward_curvature(self, s):
        """Curvature with respect to the normal pointing into the domain"""
        return self.traversal_sign * self.kappa(s)

    def inward_normal(self, s):
        speed = self.speed(s)
        sign = self.traversal_sign
        return np.stack((-sign * self.dy(s) / speed, sign * self.dx(s) / speed), axis=-1)

    def points(self, s):
        return np.stack((self.x(s), self.y(s)), axis=-1)

    @model_validator(mode="after")
    def _check_closed(self):
        start = np.array([self.x(0.0), self.y(0.0)], dtype=float)
        end = np.array([self.x(self.period), self.y(self.period)], dtype=float)
        scale = max(1.0, float(np.max(np.abs(start))))
        if np.max(np.abs(start - end)) > 1e-8 * scale:
            raise ValueError("curve is not closed: x(0) != x(period)")
        total = integrate_over_parameter(lambda s: self.kappa(s) * self.speed(s), self.period)
        if abs(abs(total) - 2.0 * math.pi) > self.curvature_tolerance:
            raise ValueError(
                f"total curvature {total:.12g} is not +-2pi; curve is not simple and closed"
            )
        return self


CompactBody = Union[Ball, PlanarCurveDomain]


def circle(r=1.0, name=None):
    """
    Counter-clockwise circle of radius r about the origin

    Args:
        r (float): Radius
        name (str, optional): Label for tables

    Returns:
        PlanarCurveDomain: The disk of radius r
    """
    return PlanarCurveDomain(
        name=name or f"circle(r={r:g})",
        period=2.0 * math.pi,
        x=lambda s: r * np.cos(s),
        y=lambda s: r * np.sin(s),
        dx=lambda s: -r * np.sin(s),
        dy=lambda s: r * np.cos(s),
        kappa=lambda s: np.full_like(np.asarray(s, dtype=float), 1.0 / r),
    )


def ellipse(a, b, name=None):
    """
    Counter-clockwise ellipse with semi-axes a (along x) and b (along y)

    Args:
        a (float): Semi-axis along x
        b (float): Semi-axis along y
        name (str, optional): Label for tables

    Returns:
        PlanarCurveDomain: The elliptic domain
    """
    return PlanarCurveDomain(
        name=name or f"ellipse(a={a:g},b={b:g})",
        period=2.0 * math.pi,
        x=lambda s: a * np.cos(s),
        y=lambda s: b * np.sin(s),
        dx=lambda s: -a * np.sin(s),
        dy=lambda s: b * np.cos(s),
        kappa=lambda s: a * b / (a * a * np.sin(s) ** 2 + b * b * np.cos(s) ** 2) ** 1.5,
    )


def parse_body(spec):
    """
    Parse a body spec string

    Accepted forms: "ball:<m>:<r>", "disk" (unit disk as a planar curve),
    "circle:<r>", "ellipse:<a>:<b>" and "curve:<path>".

    Args:
        spec (str): Body description

    Returns:
        CompactBody: The parsed body
    """
    parts = spec.strip().split(":")
    kind = parts[0].lower()
    try:
        if kind == "ball" and len(parts) == 3:
            return Ball(m=int(parts[1]), r=float(parts[2]))
        if kind == "disk" and len(parts) == 1:
            return circle(1.0, name="disk")
        if kind == "circle" and len(parts) == 2:
            return circle(float(parts[1]))
        if kind == "ellipse" and len(parts) == 3:
            return ellipse(float(parts[1]), float(parts[2]))
        if kind == "curve" and len(parts) >= 2:
            from src.geometry.curve_file import load_curve
            return load_curve(":".join(parts[1:]))
    except ValueError as e:
        raise ValueError(f"Invalid body spec '{spec}': {e}") from e
    raise ValueError(
        f"Unsupported body spec '{spec}'. Use ball:<m>:<r>, disk, circle:<r>, "
        "ellipse:<a>:<b> or curve:<path>."
    )
