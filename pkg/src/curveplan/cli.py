"""Command-line front end.

Commands: plan, bench, render, gen, serve. Exit codes are part of the
contract: 0 success, 1 usage or I/O error, 2 planner reported failure.
Config precedence: flag overrides > --config file > built-in defaults.
CURVEPLAN_SEED supplies the seed when --seed is absent; the flag wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from .bench import (
    BenchReport,
    Planner,
    PlannerConfigs,
    plan_result_to_dict,
    run_benchmark,
    run_planner,
    report_to_json,
    trials_to_csv,
)
from .geometry import Point2
from .render import RenderStyle, render_svg
from .scenario import (
    Bounds,
    Scenario,
    ScenarioError,
    generate_scenario,
    load_scenario,
    save_scenario,
)

EXIT_OK = 0
EXIT_USAGE_OR_IO = 1
EXIT_PLANNER_FAILED = 2

SEED_ENV_VAR = "CURVEPLAN_SEED"


class CliError(Exception):
    """Usage or I/O problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliError(message)


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        seed = value
    else:
        raw = os.environ.get(SEED_ENV_VAR)
        if raw is None:
            return 0
        try:
            seed = int(raw)
        except ValueError:
            raise CliError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")
    if seed < 0:
        raise CliError("seed must be a nonnegative integer")
    return seed


def _load_scenario_arg(path: str) -> Scenario:
    p = Path(path)
    if not p.exists():
        raise CliError(f"scenario file not found: {path}")
    try:
        return load_scenario(p)
    except ScenarioError as exc:
        raise CliError(f"bad scenario file {path}: {exc}")


def _overlay(config, section: dict, path: str):
    unknown = set(section) - {f for f in config.__dataclass_fields__}
    if unknown:
        raise CliError(f"unknown field(s) in {path}: {', '.join(sorted(unknown))}")
    try:
        return replace(config, **section)
    except (TypeError, ValueError) as exc:
        raise CliError(f"bad config values in {path}: {exc}")


def build_configs(config_path: str | None, args: argparse.Namespace) -> PlannerConfigs:
    """Defaults, overlaid with the optional --config file, then with flags."""
    configs = PlannerConfigs()
    if config_path is not None:
        p = Path(config_path)
        if not p.exists():
            raise CliError(f"config file not found: {config_path}")
        try:
            data = json.loads(p.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise CliError(f"invalid JSON in {config_path}: {exc}")
        if not isinstance(data, dict):
            raise CliError(f"config file {config_path} must hold a JSON object")
        unknown = set(data) - {"dccppa", "rrt", "prm"}
        if unknown:
            raise CliError(f"unknown config section(s): {', '.join(sorted(unknown))}")
        configs = PlannerConfigs(
            dccppa=_overlay(configs.dccppa, data.get("dccppa", {}), f"{config_path}:dccppa"),
            rrt=_overlay(configs.rrt, data.get("rrt", {}), f"{config_path}:rrt"),
            prm=_overlay(configs.prm, data.get("prm", {}), f"{config_path}:prm"),
        )

    dccppa = configs.dccppa
    rrt = configs.rrt
    prm = configs.prm
    try:
        if getattr(args, "beta", None) is not None:
            dccppa = replace(dccppa, beta=args.beta)
        if getattr(args, "kappa_max", None) is not None:
            dccppa = replace(dccppa, curvature_threshold=args.kappa_max)
        if getattr(args, "step", None) is not None:
            dccppa = replace(dccppa, max_step=args.step)
            rrt = replace(rrt, step_size=args.step)
        if getattr(args, "tolerance", None) is not None:
            dccppa = replace(dccppa, goal_tolerance=args.tolerance)
            rrt = replace(rrt, goal_tolerance=args.tolerance)
            prm = replace(prm, goal_tolerance=args.tolerance)
        if getattr(args, "iters", None) is not None:
            dccppa = replace(dccppa, max_iterations=args.iters)
            rrt = replace(rrt, max_nodes=args.iters)
            prm = replace(prm, n_samples=args.iters)
    except ValueError as exc:
        raise CliError(str(exc))
    return PlannerConfigs(dccppa=dccppa, rrt=rrt, prm=prm)


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file with dccppa/rrt/prm sections")
    parser.add_argument("--beta", type=float, help="curvature weight in the objective")
    parser.add_argument("--kappa-max", dest="kappa_max", type=float, help="curvature threshold")
    parser.add_argument("--step", type=float, help="max step size (also the rrt step)")
    parser.add_argument("--tolerance", type=float, help="goal arrival tolerance")
    parser.add_argument(
        "--iters", type=int, help="iteration budget (dccppa iterations, rrt nodes, prm samples)"
    )


def _write_text(path: str | Path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}")


def _cmd_plan(args: argparse.Namespace) -> int:
    scenario = _load_scenario_arg(args.scenario)
    configs = build_configs(args.config, args)
    seed = _resolve_seed(args.seed)
    result = run_planner(args.planner, scenario, configs, seed)
    payload = plan_result_to_dict(args.planner, seed, scenario, result, configs.dccppa.beta)
    _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    print(
        f"planner={args.planner} succeeded={str(result.succeeded).lower()} "
        f"nodes={result.nodes_expanded} length={payload['path_length']:.3f} "
        f"objective={payload['objective']:.3f}"
    )
    return EXIT_OK if result.succeeded else EXIT_PLANNER_FAILED


def _format_bench_table(report: BenchReport) -> str:
    by_planner = {p.value: {} for p in Planner}
    n_trials = 0
    for r in report.trials:
        by_planner[r.planner][r.trial_index] = r
        n_trials = max(n_trials, r.trial_index + 1)
    lines = [f"{'trial':>5}  {'dccppa':>8}  {'rrt':>8}  {'prm':>8}"]
    for t in range(n_trials):
        cells = []
        for p in Planner:
            rec = by_planner[p.value].get(t)
            cells.append(f"{rec.nodes_expanded:>8}" if rec else f"{'-':>8}")
        lines.append(f"{t + 1:>5}  " + "  ".join(cells))
    lines.append("")
    lines.append(
        f"{'planner':<8} {'trials':>6} {'success':>8} {'mean':>9} {'median':>9} "
        f"{'min':>6} {'max':>6} {'stddev':>9}"
    )
    for p in Planner:
        s = report.summary.get(p.value)
        if s is None:
            continue

        def num(v, fmt=".1f"):
            return "-" if v is None else format(v, fmt)

        lines.append(
            f"{s.planner:<8} {s.n_trials:>6} {s.success_rate * 100:>7.0f}% "
            f"{num(s.nodes_mean):>9} {num(s.nodes_median):>9} "
            f"{num(s.nodes_min, 'd'):>6} {num(s.nodes_max, 'd'):>6} {num(s.nodes_stddev):>9}"
        )
    return "\n".join(lines)


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise CliError("--trials must be >= 1")
    scenario = _load_scenario_arg(args.scenario)
    configs = build_configs(args.config, args)
    seed = _resolve_seed(args.seed)
    report = run_benchmark(scenario, configs, args.trials, seed, n_workers=args.workers)
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(f"cannot create {out_dir}: {exc}")
    _write_text(out_dir / "report.json", report_to_json(report))
    _write_text(out_dir / "report.csv", trials_to_csv(report.trials))
    print(_format_bench_table(report))
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    scenario = _load_scenario_arg(args.scenario)
    paths: list[tuple[str, list[Point2]]] = []
    for result_path in args.path or []:
        p = Path(result_path)
        if not p.exists():
            raise CliError(f"result file not found: {result_path}")
        try:
            payload = json.loads(p.read_text(encoding="utf-8"))
            label = str(payload["planner"])
            points = [Point2(float(pt["x"]), float(pt["y"])) for pt in payload["path"]]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise CliError(f"bad result file {result_path}: {exc}")
        paths.append((label, points))
    try:
        style = RenderStyle(width=args.width, height=args.height)
    except ValueError as exc:
        raise CliError(str(exc))
    _write_text(args.out, render_svg(scenario, paths, style))
    print(f"wrote {args.out}")
    return EXIT_OK


def _parse_floats(raw: str, n: int, what: str) -> list[float]:
    parts = raw.split(",")
    if len(parts) != n:
        raise CliError(f"{what} must be {n} comma-separated numbers, got {raw!r}")
    try:
        return [float(x) for x in parts]
    except ValueError:
        raise CliError(f"{what} must be numeric, got {raw!r}")


def _cmd_gen(args: argparse.Namespace) -> int:
    lo_x, lo_y, hi_x, hi_y = _parse_floats(args.bounds, 4, "--bounds")
    r_min, r_max = _parse_floats(args.radius_range, 2, "--radius-range")
    seed = _resolve_seed(args.seed)
    try:
        scenario = generate_scenario(
            Bounds(lo_x, lo_y, hi_x, hi_y),
            args.obstacles,
            (r_min, r_max),
            seed,
            name=args.name,
        )
    except (ScenarioError, ValueError) as exc:
        raise CliError(str(exc))
    try:
        save_scenario(scenario, args.out)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}")
    print(f"wrote {args.out} ({len(scenario.obstacles)} obstacles)")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curveplan", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_plan = sub.add_parser("plan", help="run one planner on a scenario")
    p_plan.add_argument("--scenario", required=True, help="scenario JSON file")
    p_plan.add_argument("--planner", required=True, choices=[p.value for p in Planner])
    p_plan.add_argument("--seed", type=int, default=None)
    p_plan.add_argument("--out", required=True, help="result JSON output path")
    _add_config_flags(p_plan)
    p_plan.set_defaults(func=_cmd_plan)

    p_bench = sub.add_parser("bench", help="run the three-planner benchmark")
    p_bench.add_argument("--scenario", required=True)
    p_bench.add_argument("--trials", type=int, required=True)
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("--out-dir", required=True, help="directory for report.json/report.csv")
    p_bench.add_argument("--workers", type=int, default=1, help="trial worker threads")
    _add_config_flags(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    p_render = sub.add_parser("render", help="render a scenario (and result paths) to SVG")
    p_render.add_argument("--scenario", required=True)
    p_render.add_argument("--path", action="append", help="plan result JSON (repeatable)")
    p_render.add_argument("--out", required=True, help="SVG output path")
    p_render.add_argument("--width", type=int, default=800)
    p_render.add_argument("--height", type=int, default=800)
    p_render.set_defaults(func=_cmd_render)

    p_gen = sub.add_parser("gen", help="generate a random scenario file")
    p_gen.add_argument("--bounds", required=True, help="min_x,min_y,max_x,max_y")
    p_gen.add_argument("--obstacles", type=int, required=True)
    p_gen.add_argument("--radius-range", required=True, help="min,max obstacle radius")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--name", default=None)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_serve = sub.add_parser("serve", help="run the HTTP planning service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE_OR_IO


def entrypoint() -> None:
    sys.exit(main())
