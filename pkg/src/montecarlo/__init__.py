"""
Brownian bridge and motion sampling, sausage coverage and Monte Carlo estimates
of Z_(k,m)(t) and Q_(k,m)(t)
"""

from src.montecarlo.estimators import (
    MCEstimate,
    estimate_Q,
    estimate_Z,
    mc_record,
    replica_volume,
    write_records,
)
from src.montecarlo.paths import (
    PathPolyline,
    bridge_array,
    motion_array,
    path_stream,
    sample_bridge,
    sample_motion,
)
from src.montecarlo.sausage import BiasMode, coverage, sausage_covers

__all__ = [
    "BiasMode",
    "MCEstimate",
    "PathPolyline",
    "bridge_array",
    "coverage",
    "estimate_Q",
    "estimate_Z",
    "mc_record",
    "motion_array",
    "path_stream",
    "replica_volume",
    "sample_bridge",
    "sample_motion",
    "sausage_covers",
    "write_records",
]
