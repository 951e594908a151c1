"""Benchmark harness: repeated seeded trials of all three planners on one
scenario, per-planner node-count statistics, and frozen JSON/CSV report
formats (see docs/FORMATS.md).

Trial seeds derive from (base_seed, planner index, trial index), so every
trial owns an independent stream and can be reproduced alone. Failures are
recorded, never retried; wall time is reported but excluded from every
determinism contract.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, replace
from enum import Enum
from typing import Sequence

from .baselines import PrmConfig, RrtConfig, prm_plan, rrt_plan
from .dccppa import DccppaConfig, PlanResult, objective, path_length, plan
from .scenario import RNG_ALGORITHM, Scenario, derive_seed


class Planner(str, Enum):
    DCCPPA = "dccppa"
    RRT = "rrt"
    PRM = "prm"


# Index order fixes the seed-derivation streams; never reorder.
PLANNER_ORDER: tuple[Planner, ...] = (Planner.DCCPPA, Planner.RRT, Planner.PRM)

CSV_HEADER = ["planner", "trial", "seed", "nodes", "path_length", "objective", "succeeded", "wall_ms"]


@dataclass(frozen=True)
class PlannerConfigs:
    dccppa: DccppaConfig = DccppaConfig()
    rrt: RrtConfig = RrtConfig()
    prm: PrmConfig = PrmConfig()


@dataclass(frozen=True)
class TrialRecord:
    planner: str
    trial_index: int
    seed: int
    nodes_expanded: int
    path_length: float
    objective_value: float
    succeeded: bool
    wall_time_ms: float


@dataclass(frozen=True)
class PlannerSummary:
    planner: str
    n_trials: int
    n_succeeded: int
    success_rate: float
    nodes_mean: float | None
    nodes_median: float | None
    nodes_min: int | None
    nodes_max: int | None
    nodes_stddev: float | None


@dataclass(frozen=True)
class BenchReport:
    scenario_name: str
    rng_algorithm: str
    configs: PlannerConfigs
    trials: tuple[TrialRecord, ...]
    summary: dict[str, PlannerSummary]


def run_planner(planner: Planner | str, scenario: Scenario, configs: PlannerConfigs, seed: int) -> PlanResult:
    """Dispatch one planning run; shared by the harness, CLI, and service."""
    planner = Planner(planner)
    if planner is Planner.DCCPPA:
        return plan(scenario, configs.dccppa, seed)
    if planner is Planner.RRT:
        return rrt_plan(scenario, configs.rrt, seed)
    return prm_plan(scenario, configs.prm, seed)


def plan_result_to_dict(
    planner: str, seed: int, scenario: Scenario, result: PlanResult, beta: float
) -> dict:
    """Plan result as a JSON-ready dict (schema frozen in docs/FORMATS.md)."""
    return {
        "planner": planner,
        "seed": seed,
        "scenario": scenario.name,
        "succeeded": result.succeeded,
        "nodes_expanded": result.nodes_expanded,
        "iterations_used": result.iterations_used,
        "committed_nodes": result.committed_nodes,
        "rejected_samples": result.rejected_samples,
        "path_length": path_length(result.path),
        "objective": objective(result.path, scenario.obstacles, beta),
        "modes": list(result.modes),
        "path": [{"x": p.x, "y": p.y} for p in result.path],
    }


def _run_trial(
    planner: Planner,
    trial_index: int,
    seed: int,
    scenario: Scenario,
    configs: PlannerConfigs,
) -> TrialRecord:
    started = time.perf_counter()
    result = run_planner(planner, scenario, configs, seed)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return TrialRecord(
        planner=planner.value,
        trial_index=trial_index,
        seed=seed,
        nodes_expanded=result.nodes_expanded,
        path_length=path_length(result.path),
        objective_value=objective(result.path, scenario.obstacles, configs.dccppa.beta),
        succeeded=result.succeeded,
        wall_time_ms=elapsed_ms,
    )


def summarize(records: Sequence[TrialRecord]) -> dict[str, PlannerSummary]:
    """Per-planner node statistics over succeeded trials plus success rate
    over all trials. Median/stddev use the sample definitions from the
    statistics module; stddev is None with fewer than two successes."""
    if not records:
        raise ValueError("summarize requires at least one record")
    rank = {p.value: i for i, p in enumerate(PLANNER_ORDER)}
    out: dict[str, PlannerSummary] = {}
    for planner in sorted({r.planner for r in records}, key=lambda p: (rank.get(p, len(rank)), p)):
        group = [r for r in records if r.planner == planner]
        succeeded = [r for r in group if r.succeeded]
        nodes = [r.nodes_expanded for r in succeeded]
        out[planner] = PlannerSummary(
            planner=planner,
            n_trials=len(group),
            n_succeeded=len(succeeded),
            success_rate=len(succeeded) / len(group),
            nodes_mean=statistics.mean(nodes) if nodes else None,
            nodes_median=statistics.median(nodes) if nodes else None,
            nodes_min=min(nodes) if nodes else None,
            nodes_max=max(nodes) if nodes else None,
            nodes_stddev=statistics.stdev(nodes) if len(nodes) >= 2 else None,
        )
    return out


def run_benchmark(
    scenario: Scenario,
    configs: PlannerConfigs,
    n_trials: int,
    base_seed: int,
    n_workers: int = 1,
) -> BenchReport:
    """Run n_trials per planner with per-trial derived seeds.

    Trials are independent, so they may run on a thread pool; records keep
    (planner, trial) order whatever the completion order, and the report is
    identical for any n_workers (wall times aside).
    """
    if n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    specs = [
        (planner, trial, derive_seed(base_seed, planner_index, trial))
        for planner_index, planner in enumerate(PLANNER_ORDER)
        for trial in range(n_trials)
    ]
    if n_workers <= 1:
        records = [_run_trial(p, t, s, scenario, configs) for p, t, s in specs]
    else:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            records = list(pool.map(lambda spec: _run_trial(*spec, scenario, configs), specs))
    return BenchReport(
        scenario_name=scenario.name,
        rng_algorithm=RNG_ALGORITHM,
        configs=configs,
        trials=tuple(records),
        summary=summarize(records),
    )


def strip_wall_times(report: BenchReport) -> BenchReport:
    """Copy with wall times zeroed; use when comparing reports for equality."""
    return replace(report, trials=tuple(replace(r, wall_time_ms=0.0) for r in report.trials))


def report_to_dict(report: BenchReport) -> dict:
    """Report as a JSON-ready dict (field names frozen in docs/FORMATS.md)."""
    return {
        "scenario": report.scenario_name,
        "rng": report.rng_algorithm,
        "configs": {
            "dccppa": asdict(report.configs.dccppa),
            "rrt": asdict(report.configs.rrt),
            "prm": asdict(report.configs.prm),
        },
        "trials": [
            {
                "planner": r.planner,
                "trial": r.trial_index,
                "seed": r.seed,
                "nodes": r.nodes_expanded,
                "path_length": r.path_length,
                "objective": r.objective_value,
                "succeeded": r.succeeded,
                "wall_ms": r.wall_time_ms,
            }
            for r in report.trials
        ],
        "summary": {name: asdict(s) for name, s in report.summary.items()},
    }


def report_to_json(report: BenchReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def trials_to_csv(records: Sequence[TrialRecord]) -> str:
    """Trials as CSV with the frozen column order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(
            [
                r.planner,
                r.trial_index,
                r.seed,
                r.nodes_expanded,
                repr(r.path_length),
                repr(r.objective_value),
                "true" if r.succeeded else "false",
                repr(r.wall_time_ms),
            ]
        )
    return buf.getvalue()


@dataclass(frozen=True)
class ScalingRow:
    scenario_name: str
    n_obstacles: int
    planner: str
    success_rate: float
    nodes_mean: float | None
    wall_ms_mean: float


def scaling_probe(
    scenarios: Sequence[Scenario],
    configs: PlannerConfigs,
    n_trials: int,
    base_seed: int,
    planners: Sequence[Planner] = PLANNER_ORDER,
) -> list[ScalingRow]:
    """Empirical scaling table over a family of scenarios (typically of
    growing obstacle count): one row per (scenario, planner) with mean
    nodes and mean wall time. Trends only; no asymptotic fit is claimed."""
    if not scenarios:
        raise ValueError("scaling_probe requires at least one scenario")
    if n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    rows: list[ScalingRow] = []
    for scenario_index, scenario in enumerate(scenarios):
        for planner in planners:
            planner_index = PLANNER_ORDER.index(planner)
            records = [
                _run_trial(
                    planner,
                    trial,
                    derive_seed(base_seed, scenario_index, planner_index, trial),
                    scenario,
                    configs,
                )
                for trial in range(n_trials)
            ]
            succeeded = [r for r in records if r.succeeded]
            rows.append(
                ScalingRow(
                    scenario_name=scenario.name,
                    n_obstacles=len(scenario.obstacles),
                    planner=planner.value,
                    success_rate=len(succeeded) / len(records),
                    nodes_mean=statistics.mean([r.nodes_expanded for r in succeeded]) if succeeded else None,
                    wall_ms_mean=statistics.mean([r.wall_time_ms for r in records]),
                )
            )
    return rows
