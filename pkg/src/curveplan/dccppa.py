"""Curvature-constrained planner: proximity-based curvature metric, path
objective, goal-directed local stepping, and curvature-bounded global
rejection sampling, alternated in a single planning loop.

The curvature metric at a point is the sum over obstacles of
``1 / (radius + center_distance)``: it grows as the point crowds obstacles.
A path is feasible when every point keeps the metric at or below the
configured threshold and no segment crosses an obstacle.

The loop is local-first: step straight toward the goal while the stepped
point stays under the curvature threshold and the connecting segment is
collision-free; otherwise fall back to rejection-sampling a replacement
point anywhere in bounds. Global samples must satisfy the curvature
threshold, lie outside obstacles, and (by default) strictly decrease
distance to the goal, which keeps every committed point making progress.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Obstacle, Point2, Segment, distance, segment_intersects_obstacle
from .scenario import Scenario, make_rng

# Floor for center distances inside the curvature metric; keeps the metric
# finite if a probe lands exactly on an obstacle center (such points are
# inside the obstacle and rejected anyway).
CURVATURE_DISTANCE_FLOOR = 1e-9

# Radial clearance added to perimeter-biased samples so float roundoff
# cannot push them inside the obstacle.
_PERIMETER_CLEARANCE = 1e-9

MODE_START = "start"
MODE_LOCAL = "local"
MODE_GLOBAL = "global"


@dataclass(frozen=True)
class DccppaConfig:
    """Planner parameters.

    beta weights the curvature term of the path objective;
    curvature_threshold bounds the per-point curvature metric; max_step
    caps local progress per iteration; goal_tolerance is the arrival
    radius; the two budgets bound iterations and per-iteration global
    sampling attempts. directional_bias requires global samples to strictly
    decrease distance to goal; perimeter_bias draws that fraction of global
    samples on obstacle perimeters instead of uniformly.
    """

    beta: float = 1.0
    curvature_threshold: float = 1.0
    max_step: float = 1.0
    goal_tolerance: float = 1.0
    max_iterations: int = 10_000
    max_global_attempts_per_iteration: int = 1_000
    directional_bias: bool = True
    perimeter_bias: float = 0.0

    def __post_init__(self) -> None:
        if self.beta < 0:
            raise ValueError("beta must be >= 0")
        for field_name in ("curvature_threshold", "max_step", "goal_tolerance"):
            if getattr(self, field_name) <= 0:
                raise ValueError(f"{field_name} must be > 0")
        for field_name in ("max_iterations", "max_global_attempts_per_iteration"):
            if getattr(self, field_name) < 1:
                raise ValueError(f"{field_name} must be >= 1")
        if not 0.0 <= self.perimeter_bias <= 1.0:
            raise ValueError("perimeter_bias must be in [0, 1]")


@dataclass(frozen=True)
class PlanResult:
    """Outcome of one planning run.

    nodes_expanded counts points committed beyond the start plus rejected
    global samples; committed_nodes and rejected_samples carry the
    breakdown. modes is aligned with path and tags each point "start",
    "local", or "global" (baseline planners use their own tags).
    """

    path: tuple[Point2, ...]
    nodes_expanded: int
    iterations_used: int
    succeeded: bool
    committed_nodes: int
    rejected_samples: int
    modes: tuple[str, ...]


def curvature(p: Point2, obstacles: tuple[Obstacle, ...] | list[Obstacle]) -> float:
    """Curvature metric at p: sum of 1/(radius + center distance) over obstacles."""
    total = 0.0
    for o in obstacles:
        d = max(distance(p, o.center), CURVATURE_DISTANCE_FLOOR)
        total += 1.0 / (o.radius + d)
    return total


def path_length(path: list[Point2] | tuple[Point2, ...]) -> float:
    """Sum of consecutive point distances; 0 for a single-point path."""
    if not path:
        raise ValueError("path must contain at least one point")
    return sum(distance(a, b) for a, b in zip(path, path[1:]))


def curvature_deviation(
    path: list[Point2] | tuple[Point2, ...],
    obstacles: tuple[Obstacle, ...] | list[Obstacle],
) -> float:
    """Path-level curvature: the curvature metric summed over all path points."""
    if not path:
        raise ValueError("path must contain at least one point")
    return sum(curvature(p, obstacles) for p in path)


def objective(
    path: list[Point2] | tuple[Point2, ...],
    obstacles: tuple[Obstacle, ...] | list[Obstacle],
    beta: float,
) -> float:
    """Path objective: length plus beta times the path-level curvature."""
    return path_length(path) + beta * curvature_deviation(path, obstacles)


def local_step(current: Point2, goal: Point2, max_step: float) -> Point2:
    """The point min(max_step, distance-to-goal) along the ray toward goal.

    Never overshoots: when the goal is within max_step the step lands on it.
    Returns goal unchanged if current == goal (the caller should have
    terminated already).
    """
    d = distance(current, goal)
    if d == 0.0:
        return goal
    step = min(max_step, d)
    return Point2(
        current.x + step * (goal.x - current.x) / d,
        current.y + step * (goal.y - current.y) / d,
    )


def global_sample(
    scenario: Scenario,
    config: DccppaConfig,
    rng: np.random.Generator,
    current: Point2,
    max_attempts: int | None = None,
) -> tuple[Point2 | None, int]:
    """Rejection-sample one admissible point in bounds.

    A draw is accepted when it is inside bounds, keeps the curvature metric
    at or below the threshold, lies outside every obstacle, and (when
    directional_bias is on) is strictly closer to the goal than current.
    Returns (point, rejections) on success and (None, attempts) after the
    attempt budget is exhausted. The caller owns rng for this trial.
    """
    bounds = scenario.bounds
    obstacles = scenario.obstacles
    budget = config.max_global_attempts_per_iteration if max_attempts is None else max_attempts
    goal_gap = distance(current, scenario.goal)
    for attempt in range(budget):
        if config.perimeter_bias > 0.0 and obstacles and rng.random() < config.perimeter_bias:
            o = obstacles[int(rng.integers(len(obstacles)))]
            angle = rng.uniform(0.0, 2.0 * math.pi)
            r = o.radius + _PERIMETER_CLEARANCE
            p = Point2(o.center.x + r * math.cos(angle), o.center.y + r * math.sin(angle))
            if not bounds.contains(p):
                continue
        else:
            p = Point2(
                rng.uniform(bounds.min_x, bounds.max_x),
                rng.uniform(bounds.min_y, bounds.max_y),
            )
        if curvature(p, obstacles) > config.curvature_threshold:
            continue
        if any(distance(p, o.center) < o.radius for o in obstacles):
            continue
        if config.directional_bias and distance(p, scenario.goal) >= goal_gap:
            continue
        return p, attempt
    return None, budget


def _segment_free(a: Point2, b: Point2, obstacles: tuple[Obstacle, ...]) -> bool:
    seg = Segment(a, b)
    return not any(segment_intersects_obstacle(seg, o) for o in obstacles)


def plan(scenario: Scenario, config: DccppaConfig, seed: int) -> PlanResult:
    """Plan from scenario.start to scenario.goal; deterministic in seed.

    Each iteration first tries the local step toward the goal and commits
    it when the stepped point passes the curvature threshold and the
    connecting segment is collision-free; otherwise it spends this
    iteration's global budget rejection-sampling a replacement (samples
    whose connecting segment collides are rejected too). Returns
    succeeded=False instead of raising when a budget is exhausted, when the
    start itself violates the curvature threshold, or when an iteration's
    global budget dries up.
    """
    rng = make_rng(seed)
    obstacles = scenario.obstacles
    goal = scenario.goal

    path: list[Point2] = [scenario.start]
    modes: list[str] = [MODE_START]
    rejected = 0
    iterations = 0
    current = scenario.start

    def result(succeeded: bool) -> PlanResult:
        committed = len(path) - 1
        return PlanResult(
            path=tuple(path),
            nodes_expanded=committed + rejected,
            iterations_used=iterations,
            succeeded=succeeded,
            committed_nodes=committed,
            rejected_samples=rejected,
            modes=tuple(modes),
        )

    if distance(current, goal) <= config.goal_tolerance:
        return result(True)
    if curvature(current, obstacles) > config.curvature_threshold:
        # No admissible path can start here.
        return result(False)

    while iterations < config.max_iterations:
        iterations += 1
        candidate = local_step(current, goal, config.max_step)
        if (
            curvature(candidate, obstacles) <= config.curvature_threshold
            and _segment_free(current, candidate, obstacles)
        ):
            path.append(candidate)
            modes.append(MODE_LOCAL)
            current = candidate
        else:
            budget = config.max_global_attempts_per_iteration
            committed = False
            while budget > 0:
                sample, sample_rejections = global_sample(
                    scenario, config, rng, current, max_attempts=budget
                )
                rejected += sample_rejections
                budget -= sample_rejections
                if sample is None:
                    break
                budget -= 1
                if _segment_free(current, sample, obstacles):
                    path.append(sample)
                    modes.append(MODE_GLOBAL)
                    current = sample
                    committed = True
                    break
                rejected += 1
            if not committed:
                return result(False)
        if distance(current, goal) <= config.goal_tolerance:
            return result(True)
    return result(False)
