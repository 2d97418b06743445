"""Deterministic 2-D multi-robot patrol simulator.

Thin facade over the compiled core: sonar-mean wall centering, color-segmentation
target selection, pixel-balance pursuit, trace capture, and trace analysis.
"""

from ._core import (
    TICK_MS,
    TICK_S,
    classify_pixel,
    clearance_at,
    distance_to_raw,
    follow_metrics_csv,
    integrate,
    midpoint,
    nav_command,
    normalize_scenario,
    obstacle_clear,
    path_metrics_csv,
    plot_follow_svg,
    plot_path_svg,
    pursuit_command,
    raw_to_distance,
    run_scenario,
    run_scenario_file,
    scan_at,
    scenario_summary,
    select_target,
    side_mean,
)

__all__ = [
    "TICK_MS",
    "TICK_S",
    "classify_pixel",
    "clearance_at",
    "distance_to_raw",
    "follow_metrics_csv",
    "integrate",
    "midpoint",
    "nav_command",
    "normalize_scenario",
    "obstacle_clear",
    "path_metrics_csv",
    "plot_follow_svg",
    "plot_path_svg",
    "pursuit_command",
    "raw_to_distance",
    "run_scenario",
    "run_scenario_file",
    "scan_at",
    "scenario_summary",
    "select_target",
    "side_mean",
]

__version__ = "1.0.0"
