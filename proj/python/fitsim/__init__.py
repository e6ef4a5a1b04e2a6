"""Simulator of sharing-rate dynamics driven by feedback disparity on networks.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    Graph,
    ParadoxProfile,
    StepMetrics,
    SweepCell,
    SweepGrid,
    Trajectory,
    __version__,
    avg_friend_degree,
    barabasi_albert,
    drf_evaluate,
    er_with_auxiliary,
    erdos_renyi,
    feedback_disparity,
    florentine_families,
    florentine_family_names,
    local_paradox,
    sharing_bias,
    simulate,
    standard_instances,
    terminal_correlation,
    threshold_sweep,
    weighted_local_paradox,
)

__all__ = [
    "Graph",
    "ParadoxProfile",
    "StepMetrics",
    "SweepCell",
    "SweepGrid",
    "Trajectory",
    "__version__",
    "avg_friend_degree",
    "barabasi_albert",
    "drf_evaluate",
    "er_with_auxiliary",
    "erdos_renyi",
    "feedback_disparity",
    "florentine_families",
    "florentine_family_names",
    "local_paradox",
    "sharing_bias",
    "simulate",
    "standard_instances",
    "terminal_correlation",
    "threshold_sweep",
    "weighted_local_paradox",
]
