"""
Heat kernels, the exterior-ball heat content and deterministic oracles for
Z_(k,2) and Q_(k,3)
"""

from src.kernels.boundary_layer import layer_cutoff, z_k2_boundary_layer
from src.kernels.exterior_ball import q1_ball_closed_form, q_k3_exact, q_table, u_exterior_ball
from src.kernels.heat import (
    KernelEval,
    Regime,
    diag_kernel_eval,
    halfline_norm,
    halfline_series,
    p_free,
    p_halfline_diag,
    p_planar_expansion_diag,
)

__all__ = [
    "KernelEval",
    "Regime",
    "diag_kernel_eval",
    "halfline_norm",
    "halfline_series",
    "layer_cutoff",
    "p_free",
    "p_halfline_diag",
    "p_planar_expansion_diag",
    "q1_ball_closed_form",
    "q_k3_exact",
    "q_table",
    "u_exterior_ball",
    "z_k2_boundary_layer",
]
