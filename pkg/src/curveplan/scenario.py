"""Scenario definition, validation, JSON I/O, seeded generation, and the
deterministic RNG contract every planner consumes.

Every stochastic component in the package draws from a numpy PCG64
generator seeded through ``SeedSequence``. Child streams for independent
trials are derived with ``derive_seed(base_seed, *key)`` so each trial owns
a private generator and can be re-run in isolation. The algorithm
identifier ``RNG_ALGORITHM`` is recorded in every benchmark report.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .geometry import Obstacle, Point2, point_in_obstacle

RNG_ALGORITHM = "numpy-pcg64/seedsequence-spawnkey-v1"

MAX_SEED = 2**64 - 1

# Attempts per obstacle before generate_scenario gives up.
_PLACEMENT_ATTEMPTS_PER_OBSTACLE = 200


class ScenarioError(Exception):
    """Base class for scenario problems."""


class ScenarioFormatError(ScenarioError):
    """Malformed scenario file: bad JSON, missing field, or wrong type."""


class ScenarioValidationError(ScenarioError):
    """Structurally valid scenario that violates an invariant."""


class PlacementError(ScenarioError):
    """generate_scenario exhausted its rejection budget (workspace too crowded)."""


class Bounds(NamedTuple):
    """Axis-aligned workspace rectangle."""

    min_x: float
    min_y: float
    max_x: float
    max_y: float

    @property
    def width(self) -> float:
        return self.max_x - self.min_x

    @property
    def height(self) -> float:
        return self.max_y - self.min_y

    def contains(self, p: Point2) -> bool:
        """Closed containment: boundary points count as inside."""
        return self.min_x <= p.x <= self.max_x and self.min_y <= p.y <= self.max_y


@dataclass(frozen=True)
class Scenario:
    """Immutable planning problem: workspace, obstacles, start, and goal."""

    name: str
    bounds: Bounds
    obstacles: tuple[Obstacle, ...]
    start: Point2
    goal: Point2


def _require_finite(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ScenarioValidationError(f"{what} is not finite")
    return value


def validate_scenario(s: Scenario) -> None:
    """Raise ScenarioValidationError naming the first violated invariant."""
    for what, value in (
        ("bounds.min_x", s.bounds.min_x),
        ("bounds.min_y", s.bounds.min_y),
        ("bounds.max_x", s.bounds.max_x),
        ("bounds.max_y", s.bounds.max_y),
        ("start.x", s.start.x),
        ("start.y", s.start.y),
        ("goal.x", s.goal.x),
        ("goal.y", s.goal.y),
    ):
        _require_finite(value, what)
    if s.bounds.width <= 0 or s.bounds.height <= 0:
        raise ScenarioValidationError("bounds must have positive width and height")
    for i, o in enumerate(s.obstacles):
        _require_finite(o.center.x, f"obstacle {i} center.x")
        _require_finite(o.center.y, f"obstacle {i} center.y")
        _require_finite(o.radius, f"obstacle {i} radius")
        if o.radius <= 0:
            raise ScenarioValidationError(f"obstacle {i} radius must be positive")
        if not s.bounds.contains(o.center):
            raise ScenarioValidationError(f"obstacle {i} center outside bounds")
    for label, p in (("start", s.start), ("goal", s.goal)):
        if not s.bounds.contains(p):
            raise ScenarioValidationError(f"{label} outside bounds")
        for i, o in enumerate(s.obstacles):
            if point_in_obstacle(p, o):
                raise ScenarioValidationError(f"{label} inside obstacle {i}")


def _point_from_json(obj: object, what: str) -> Point2:
    if not isinstance(obj, dict):
        raise ScenarioFormatError(f"{what} must be an object with x/y")
    try:
        return Point2(float(obj["x"]), float(obj["y"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioFormatError(f"{what} missing or non-numeric x/y") from exc


def scenario_from_dict(data: object) -> Scenario:
    """Build and validate a Scenario from already-parsed scenario JSON."""
    if not isinstance(data, dict):
        raise ScenarioFormatError("scenario JSON must be an object")
    try:
        name = data["name"]
        bounds_obj = data["bounds"]
        obstacles_obj = data["obstacles"]
    except KeyError as exc:
        raise ScenarioFormatError(f"missing field {exc.args[0]!r}") from exc
    if not isinstance(name, str):
        raise ScenarioFormatError("name must be a string")
    if not isinstance(bounds_obj, dict):
        raise ScenarioFormatError("bounds must be an object")
    try:
        bounds = Bounds(
            float(bounds_obj["min_x"]),
            float(bounds_obj["min_y"]),
            float(bounds_obj["max_x"]),
            float(bounds_obj["max_y"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioFormatError("bounds missing or non-numeric min/max fields") from exc
    if not isinstance(obstacles_obj, list):
        raise ScenarioFormatError("obstacles must be an array")
    obstacles = []
    for i, entry in enumerate(obstacles_obj):
        if not isinstance(entry, dict):
            raise ScenarioFormatError(f"obstacle {i} must be an object")
        try:
            obstacles.append(
                Obstacle(Point2(float(entry["cx"]), float(entry["cy"])), float(entry["r"]))
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ScenarioFormatError(f"obstacle {i} missing or non-numeric cx/cy/r") from exc
    scenario = Scenario(
        name=name,
        bounds=bounds,
        obstacles=tuple(obstacles),
        start=_point_from_json(data.get("start"), "start"),
        goal=_point_from_json(data.get("goal"), "goal"),
    )
    validate_scenario(scenario)
    return scenario


def scenario_to_dict(s: Scenario) -> dict:
    """Scenario as a JSON-ready dict (schema frozen in docs/FORMATS.md)."""
    return {
        "name": s.name,
        "bounds": {
            "min_x": s.bounds.min_x,
            "min_y": s.bounds.min_y,
            "max_x": s.bounds.max_x,
            "max_y": s.bounds.max_y,
        },
        "obstacles": [
            {"cx": o.center.x, "cy": o.center.y, "r": o.radius} for o in s.obstacles
        ],
        "start": {"x": s.start.x, "y": s.start.y},
        "goal": {"x": s.goal.x, "y": s.goal.y},
    }


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(f"invalid JSON in {path}: {exc}") from exc
    return scenario_from_dict(data)


def save_scenario(s: Scenario, path: str | Path) -> None:
    """Write a scenario as JSON. Round-trips exactly through load_scenario."""
    Path(path).write_text(json.dumps(scenario_to_dict(s), indent=2) + "\n", encoding="utf-8")


def builtin_scenario_path(name: str = "scenario1") -> Path:
    """Path of a scenario fixture shipped with the package."""
    path = Path(__file__).parent / "data" / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(f"no builtin scenario named {name!r}")
    return path


def builtin_scenario(name: str = "scenario1") -> Scenario:
    """Load a scenario fixture shipped with the package."""
    return load_scenario(builtin_scenario_path(name))


def _check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def derive_seed(base_seed: int, *key: int) -> int:
    """Derive an independent child seed for a stream identified by key.

    Uses SeedSequence spawn keys, so (base_seed, key) -> child seed is a
    fixed, portable mapping.
    """
    ss = np.random.SeedSequence(_check_seed(base_seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    """Private PCG64 generator for one trial."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(_check_seed(seed))))


def generate_scenario(
    bounds: Bounds,
    n_obstacles: int,
    radius_range: tuple[float, float],
    seed: int,
    name: str | None = None,
) -> Scenario:
    """Generate a random valid scenario, deterministic in its arguments.

    Start and goal sit at fixed offsets near opposite corners; obstacle
    centers are sampled uniformly in bounds with radii uniform in
    radius_range. Obstacles that would swallow start or goal are rejected
    and resampled; after a bounded number of rejections PlacementError is
    raised.
    """
    if n_obstacles < 0:
        raise ValueError("n_obstacles must be >= 0")
    r_min, r_max = float(radius_range[0]), float(radius_range[1])
    if not (0 < r_min <= r_max):
        raise ValueError("radius_range must satisfy 0 < min <= max")
    if bounds.width <= 0 or bounds.height <= 0:
        raise ValueError("bounds must have positive width and height")

    inset_x = 0.05 * bounds.width
    inset_y = 0.05 * bounds.height
    start = Point2(bounds.min_x + inset_x, bounds.min_y + inset_y)
    goal = Point2(bounds.max_x - inset_x, bounds.max_y - inset_y)

    rng = make_rng(seed)
    obstacles: list[Obstacle] = []
    budget = _PLACEMENT_ATTEMPTS_PER_OBSTACLE * max(n_obstacles, 1)
    while len(obstacles) < n_obstacles:
        if budget <= 0:
            raise PlacementError(
                f"could not place {n_obstacles} obstacles of radius "
                f"[{r_min}, {r_max}] in {bounds.width}x{bounds.height} bounds"
            )
        budget -= 1
        center = Point2(
            rng.uniform(bounds.min_x, bounds.max_x),
            rng.uniform(bounds.min_y, bounds.max_y),
        )
        radius = rng.uniform(r_min, r_max)
        candidate = Obstacle(center, radius)
        if point_in_obstacle(start, candidate) or point_in_obstacle(goal, candidate):
            continue
        obstacles.append(candidate)

    scenario = Scenario(
        name=name if name is not None else f"generated-{seed}",
        bounds=bounds,
        obstacles=tuple(obstacles),
        start=start,
        goal=goal,
    )
    validate_scenario(scenario)
    return scenario
