"""
Compact bodies (balls and smooth planar domains) and the geometric functionals
that every coefficient formula consumes
"""

from src.geometry.bodies import (
    Ball,
    CompactBody,
    Orientation,
    PlanarCurveDomain,
    circle,
    ellipse,
    integrate_over_parameter,
    parse_body,
)
from src.geometry.curve_file import load_curve, save_curve
from src.geometry.functionals import (
    GeomFunctionals,
    functionals_constant_f,
    reach,
    surface_measure,
    total_curvature,
    unit_ball_volume,
    volume,
)

__all__ = [
    "Ball",
    "CompactBody",
    "GeomFunctionals",
    "Orientation",
    "PlanarCurveDomain",
    "circle",
    "ellipse",
    "functionals_constant_f",
    "integrate_over_parameter",
    "load_curve",
    "parse_body",
    "reach",
    "save_curve",
    "surface_measure",
    "total_curvature",
    "unit_ball_volume",
    "volume",
]
