from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from curveplan.geometry import Point2
from curveplan.render import PLANNER_COLORS, RenderStyle, WorldTransform, render_svg
from curveplan.scenario import Bounds

SVG_NS = "{http://www.w3.org/2000/svg}"


def _parse(svg: str) -> ET.Element:
    return ET.fromstring(svg)


def test_svg_is_well_formed_and_counts_elements(scenario1):
    paths = [("dccppa", [scenario1.start, Point2(50, 50), scenario1.goal])]
    svg = render_svg(scenario1, paths)
    root = _parse(svg)
    circles = root.findall(f".//{SVG_NS}circle")
    polylines = root.findall(f".//{SVG_NS}polyline")
    assert len(circles) == len(scenario1.obstacles)
    assert len(polylines) == 1


def test_svg_empty_scenario_no_paths(empty_scenario):
    svg = render_svg(empty_scenario)
    root = _parse(svg)
    assert root.findall(f".//{SVG_NS}circle") == []
    assert root.findall(f".//{SVG_NS}polyline") == []
    texts = [t.text for t in root.findall(f".//{SVG_NS}text")]
    assert "start" in texts and "goal" in texts


def test_world_transform_invertible():
    style = RenderStyle()
    tf = WorldTransform.fit(Bounds(-10.0, 5.0, 90.0, 55.0), style)
    for p in (Point2(-10, 5), Point2(90, 55), Point2(13.25, 27.5)):
        px, py = tf.to_pixel(p)
        back = tf.to_world(px, py)
        assert abs(back.x - p.x) < 1e-9
        assert abs(back.y - p.y) < 1e-9


def test_rendered_points_recover_world_coordinates(scenario1):
    style = RenderStyle()
    pts = [scenario1.start, Point2(47.3, 61.9), scenario1.goal]
    svg = render_svg(scenario1, [("dccppa", pts)], style)
    root = _parse(svg)
    polyline = root.find(f".//{SVG_NS}polyline")
    assert polyline is not None
    tf = WorldTransform.fit(scenario1.bounds, style)
    rendered = [tuple(map(float, pair.split(","))) for pair in polyline.get("points").split()]
    assert len(rendered) == len(pts)
    for (px, py), world in zip(rendered, pts):
        recovered = tf.to_world(px, py)
        assert abs(recovered.x - world.x) <= 0.5
        assert abs(recovered.y - world.y) <= 0.5


def test_y_axis_flipped(empty_scenario):
    tf = WorldTransform.fit(empty_scenario.bounds, RenderStyle())
    _, py_low = tf.to_pixel(Point2(50, 0))
    _, py_high = tf.to_pixel(Point2(50, 100))
    assert py_high < py_low


def test_planner_colors_and_fallback(scenario1):
    svg = render_svg(
        scenario1,
        [("dccppa", [scenario1.start]), ("rrt", [scenario1.start]), ("custom", [scenario1.start])],
    )
    root = _parse(svg)
    strokes = [p.get("stroke") for p in root.findall(f".//{SVG_NS}polyline")]
    assert strokes[0] == PLANNER_COLORS["dccppa"]
    assert strokes[1] == PLANNER_COLORS["rrt"]
    assert strokes[2] not in (None, PLANNER_COLORS["dccppa"], PLANNER_COLORS["rrt"])


def test_style_validation():
    with pytest.raises(ValueError):
        RenderStyle(width=0)
    with pytest.raises(ValueError):
        RenderStyle(background="red")
    with pytest.raises(ValueError):
        RenderStyle(margin=500)


def test_label_escaping(empty_scenario):
    svg = render_svg(empty_scenario, [("a<b&c", [empty_scenario.start])])
    root = _parse(svg)
    texts = [t.text for t in root.findall(f".//{SVG_NS}text")]
    assert "a<b&c" in texts
