"""Pydantic request/response models for the HTTP service.

Field names match the frozen file formats (docs/FORMATS.md), so a scenario
JSON file is a valid request body fragment and a /plan response body is the
same document the CLI writes with `plan --out`.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, Field, field_validator

from ..baselines import PrmConfig, RrtConfig
from ..bench import PlannerConfigs
from ..dccppa import DccppaConfig
from ..geometry import Obstacle, Point2
from ..scenario import MAX_SEED, Bounds, Scenario, validate_scenario


class PointModel(BaseModel):
    x: float
    y: float

    @field_validator("x", "y")
    @classmethod
    def _finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("coordinates must be finite")
        return v

    def to_point(self) -> Point2:
        return Point2(self.x, self.y)


class BoundsModel(BaseModel):
    min_x: float
    min_y: float
    max_x: float
    max_y: float

    def to_bounds(self) -> Bounds:
        return Bounds(self.min_x, self.min_y, self.max_x, self.max_y)


class ObstacleModel(BaseModel):
    cx: float
    cy: float
    r: float = Field(gt=0)

    def to_obstacle(self) -> Obstacle:
        return Obstacle(Point2(self.cx, self.cy), self.r)


class ScenarioModel(BaseModel):
    name: str
    bounds: BoundsModel
    obstacles: list[ObstacleModel] = Field(default_factory=list)
    start: PointModel
    goal: PointModel

    def to_scenario(self) -> Scenario:
        scenario = Scenario(
            name=self.name,
            bounds=self.bounds.to_bounds(),
            obstacles=tuple(o.to_obstacle() for o in self.obstacles),
            start=self.start.to_point(),
            goal=self.goal.to_point(),
        )
        validate_scenario(scenario)
        return scenario

    @classmethod
    def from_scenario(cls, s: Scenario) -> "ScenarioModel":
        return cls(
            name=s.name,
            bounds=BoundsModel(
                min_x=s.bounds.min_x,
                min_y=s.bounds.min_y,
                max_x=s.bounds.max_x,
                max_y=s.bounds.max_y,
            ),
            obstacles=[ObstacleModel(cx=o.center.x, cy=o.center.y, r=o.radius) for o in s.obstacles],
            start=PointModel(x=s.start.x, y=s.start.y),
            goal=PointModel(x=s.goal.x, y=s.goal.y),
        )


class DccppaConfigModel(BaseModel):
    beta: float = 1.0
    curvature_threshold: float = 1.0
    max_step: float = 1.0
    goal_tolerance: float = 1.0
    max_iterations: int = 10_000
    max_global_attempts_per_iteration: int = 1_000
    directional_bias: bool = True
    perimeter_bias: float = 0.0

    def to_config(self) -> DccppaConfig:
        return DccppaConfig(**self.model_dump())


class RrtConfigModel(BaseModel):
    step_size: float = 1.0
    goal_bias: float = 0.3
    goal_tolerance: float = 1.0
    max_nodes: int = 10_000

    def to_config(self) -> RrtConfig:
        return RrtConfig(**self.model_dump())


class PrmConfigModel(BaseModel):
    n_samples: int = 300
    k_neighbors: int = 10
    goal_tolerance: float = 1.0

    def to_config(self) -> PrmConfig:
        return PrmConfig(**self.model_dump())


class PlannerConfigsModel(BaseModel):
    dccppa: DccppaConfigModel = Field(default_factory=DccppaConfigModel)
    rrt: RrtConfigModel = Field(default_factory=RrtConfigModel)
    prm: PrmConfigModel = Field(default_factory=PrmConfigModel)

    def to_configs(self) -> PlannerConfigs:
        return PlannerConfigs(
            dccppa=self.dccppa.to_config(),
            rrt=self.rrt.to_config(),
            prm=self.prm.to_config(),
        )


class PlanRequest(BaseModel):
    scenario: ScenarioModel
    planner: str = Field(pattern="^(dccppa|rrt|prm)$")
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    configs: PlannerConfigsModel = Field(default_factory=PlannerConfigsModel)


class PlanResponse(BaseModel):
    planner: str
    seed: int
    scenario: str
    succeeded: bool
    nodes_expanded: int
    iterations_used: int
    committed_nodes: int
    rejected_samples: int
    path_length: float
    objective: float
    modes: list[str]
    path: list[PointModel]


class BenchRequest(BaseModel):
    scenario: ScenarioModel
    n_trials: int = Field(ge=1)
    base_seed: int = Field(default=0, ge=0, le=MAX_SEED)
    workers: int = Field(default=1, ge=1)
    configs: PlannerConfigsModel = Field(default_factory=PlannerConfigsModel)


class TrialModel(BaseModel):
    planner: str
    trial: int
    seed: int
    nodes: int
    path_length: float
    objective: float
    succeeded: bool
    wall_ms: float


class PlannerSummaryModel(BaseModel):
    planner: str
    n_trials: int
    n_succeeded: int
    success_rate: float
    nodes_mean: float | None = None
    nodes_median: float | None = None
    nodes_min: int | None = None
    nodes_max: int | None = None
    nodes_stddev: float | None = None


class BenchResponse(BaseModel):
    scenario: str
    rng: str
    configs: dict[str, dict]
    trials: list[TrialModel]
    summary: dict[str, PlannerSummaryModel]


class GenerateRequest(BaseModel):
    bounds: BoundsModel
    n_obstacles: int = Field(ge=0)
    radius_min: float = Field(gt=0)
    radius_max: float = Field(gt=0)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    name: str | None = None


class LabeledPathModel(BaseModel):
    label: str
    points: list[PointModel]


class RenderRequest(BaseModel):
    scenario: ScenarioModel
    paths: list[LabeledPathModel] = Field(default_factory=list)
    width: int = Field(default=800, gt=0)
    height: int = Field(default=800, gt=0)
