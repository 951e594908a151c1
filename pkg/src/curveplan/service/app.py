"""FastAPI application wrapping the planning package.

Every endpoint is stateless: requests carry the scenario, config, and seed,
so identical requests return identical bodies (wall times aside) no matter
which worker serves them.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import Response

from .. import __version__
from ..bench import plan_result_to_dict, report_to_dict, run_benchmark, run_planner
from ..render import RenderStyle, render_svg
from ..scenario import PlacementError, ScenarioValidationError, generate_scenario
from .models import (
    BenchRequest,
    BenchResponse,
    GenerateRequest,
    PlanRequest,
    PlanResponse,
    RenderRequest,
    ScenarioModel,
)

app = FastAPI(
    title="curveplan",
    version=__version__,
    description="Stateless 2D path-planning service: plan, benchmark, generate, render.",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/plan", response_model=PlanResponse)
def plan_endpoint(request: PlanRequest) -> PlanResponse:
    try:
        scenario = request.scenario.to_scenario()
        configs = request.configs.to_configs()
    except (ScenarioValidationError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    result = run_planner(request.planner, scenario, configs, request.seed)
    return PlanResponse(
        **plan_result_to_dict(request.planner, request.seed, scenario, result, configs.dccppa.beta)
    )


@app.post("/bench", response_model=BenchResponse)
def bench_endpoint(request: BenchRequest) -> BenchResponse:
    try:
        scenario = request.scenario.to_scenario()
        configs = request.configs.to_configs()
    except (ScenarioValidationError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    report = run_benchmark(scenario, configs, request.n_trials, request.base_seed, request.workers)
    return BenchResponse(**report_to_dict(report))


@app.post("/scenario/generate", response_model=ScenarioModel)
def generate_endpoint(request: GenerateRequest) -> ScenarioModel:
    try:
        scenario = generate_scenario(
            request.bounds.to_bounds(),
            request.n_obstacles,
            (request.radius_min, request.radius_max),
            request.seed,
            name=request.name,
        )
    except PlacementError as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    except (ScenarioValidationError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return ScenarioModel.from_scenario(scenario)


@app.post("/render")
def render_endpoint(request: RenderRequest) -> Response:
    try:
        scenario = request.scenario.to_scenario()
        style = RenderStyle(width=request.width, height=request.height)
    except (ScenarioValidationError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    paths = [(p.label, [pt.to_point() for pt in p.points]) for p in request.paths]
    return Response(content=render_svg(scenario, paths, style), media_type="image/svg+xml")
