"""2D sampling-based path planning toolkit: a curvature-constrained planner,
RRT and PRM baselines, a deterministic benchmark harness, and SVG rendering.
"""

from .baselines import PrmConfig, Roadmap, RrtConfig, Tree, prm_plan, rrt_plan
from .bench import (
    BenchReport,
    Planner,
    PlannerConfigs,
    TrialRecord,
    run_benchmark,
    run_planner,
    scaling_probe,
    summarize,
)
from .dccppa import (
    DccppaConfig,
    PlanResult,
    curvature,
    curvature_deviation,
    global_sample,
    local_step,
    objective,
    path_length,
    plan,
)
from .geometry import (
    Obstacle,
    Point2,
    Segment,
    distance,
    path_collides,
    point_in_obstacle,
    segment_intersects_obstacle,
)
from .render import RenderStyle, render_svg
from .scenario import (
    RNG_ALGORITHM,
    Bounds,
    PlacementError,
    Scenario,
    ScenarioError,
    ScenarioFormatError,
    ScenarioValidationError,
    builtin_scenario,
    builtin_scenario_path,
    derive_seed,
    generate_scenario,
    load_scenario,
    make_rng,
    save_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "Bounds",
    "DccppaConfig",
    "Obstacle",
    "PlacementError",
    "PlanResult",
    "Planner",
    "PlannerConfigs",
    "Point2",
    "PrmConfig",
    "RNG_ALGORITHM",
    "RenderStyle",
    "Roadmap",
    "RrtConfig",
    "Scenario",
    "ScenarioError",
    "ScenarioFormatError",
    "ScenarioValidationError",
    "Segment",
    "Tree",
    "TrialRecord",
    "builtin_scenario",
    "builtin_scenario_path",
    "curvature",
    "curvature_deviation",
    "derive_seed",
    "distance",
    "generate_scenario",
    "global_sample",
    "load_scenario",
    "local_step",
    "make_rng",
    "objective",
    "path_collides",
    "path_length",
    "plan",
    "point_in_obstacle",
    "prm_plan",
    "render_svg",
    "rrt_plan",
    "run_benchmark",
    "run_planner",
    "save_scenario",
    "scaling_probe",
    "segment_intersects_obstacle",
    "summarize",
]
