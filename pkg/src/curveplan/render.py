"""Static SVG figures: obstacle map plus any number of labeled paths.

Output is plain text SVG so tests can diff and parse it; obstacles are the
only circle elements in the document (markers are path glyphs), which lets
tests count one circle per obstacle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence
from xml.sax.saxutils import escape

from .geometry import Point2
from .scenario import Bounds, Scenario

PLANNER_COLORS = {
    "dccppa": "#d81b60",
    "rrt": "#ff7f0e",
    "prm": "#1f77b4",
}

_FALLBACK_COLORS = ("#2ca02c", "#9467bd", "#8c564b", "#17becf")

_HEX_COLOR = re.compile(r"^#[0-9a-fA-F]{6}$")


@dataclass(frozen=True)
class RenderStyle:
    width: int = 800
    height: int = 800
    margin: int = 40
    background: str = "#ffffff"
    bounds_stroke: str = "#333333"
    obstacle_fill: str = "#c9ccd1"
    obstacle_stroke: str = "#5a5f66"
    start_color: str = "#2e7d32"
    goal_color: str = "#c62828"
    path_stroke_width: float = 2.0
    obstacle_stroke_width: float = 1.0
    marker_size: float = 6.0
    planner_colors: dict[str, str] = field(default_factory=lambda: dict(PLANNER_COLORS))

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")
        if self.margin < 0 or 2 * self.margin >= min(self.width, self.height):
            raise ValueError("margin must leave a positive drawing area")
        for color in (
            self.background,
            self.bounds_stroke,
            self.obstacle_fill,
            self.obstacle_stroke,
            self.start_color,
            self.goal_color,
            *self.planner_colors.values(),
        ):
            if not _HEX_COLOR.match(color):
                raise ValueError(f"invalid color {color!r}, expected #rrggbb")

    def color_for(self, label: str, index: int) -> str:
        key = label.strip().lower()
        if key in self.planner_colors:
            return self.planner_colors[key]
        return _FALLBACK_COLORS[index % len(_FALLBACK_COLORS)]


@dataclass(frozen=True)
class WorldTransform:
    """Affine, aspect-preserving world-to-pixel map (y flipped for SVG)."""

    scale: float
    offset_x: float
    offset_y: float
    height: float

    @classmethod
    def fit(cls, bounds: Bounds, style: RenderStyle) -> "WorldTransform":
        avail_w = style.width - 2 * style.margin
        avail_h = style.height - 2 * style.margin
        scale = min(avail_w / bounds.width, avail_h / bounds.height)
        offset_x = style.margin + (avail_w - bounds.width * scale) / 2 - bounds.min_x * scale
        offset_y = style.margin + (avail_h - bounds.height * scale) / 2 - bounds.min_y * scale
        return cls(scale=scale, offset_x=offset_x, offset_y=offset_y, height=float(style.height))

    def to_pixel(self, p: Point2) -> tuple[float, float]:
        return (
            self.offset_x + p.x * self.scale,
            self.height - (self.offset_y + p.y * self.scale),
        )

    def to_world(self, px: float, py: float) -> Point2:
        return Point2(
            (px - self.offset_x) / self.scale,
            (self.height - py - self.offset_y) / self.scale,
        )


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _marker_start(px: float, py: float, size: float, color: str) -> str:
    # Diamond glyph.
    d = (
        f"M {_fmt(px)},{_fmt(py - size)} L {_fmt(px + size)},{_fmt(py)} "
        f"L {_fmt(px)},{_fmt(py + size)} L {_fmt(px - size)},{_fmt(py)} Z"
    )
    return f'  <path d="{d}" fill="{color}" stroke="none"/>'


def _marker_goal(px: float, py: float, size: float, color: str) -> str:
    # X glyph.
    d = (
        f"M {_fmt(px - size)},{_fmt(py - size)} L {_fmt(px + size)},{_fmt(py + size)} "
        f"M {_fmt(px - size)},{_fmt(py + size)} L {_fmt(px + size)},{_fmt(py - size)}"
    )
    return f'  <path d="{d}" fill="none" stroke="{color}" stroke-width="2.5"/>'


def render_svg(
    scenario: Scenario,
    paths: Sequence[tuple[str, Sequence[Point2]]] = (),
    style: RenderStyle | None = None,
) -> str:
    """Render the scenario and labeled paths to an SVG document string."""
    style = style or RenderStyle()
    tf = WorldTransform.fit(scenario.bounds, style)
    b = scenario.bounds

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">',
        f'  <rect x="0" y="0" width="{style.width}" height="{style.height}" fill="{style.background}"/>',
    ]

    corner_min = tf.to_pixel(Point2(b.min_x, b.max_y))
    lines.append(
        f'  <rect x="{_fmt(corner_min[0])}" y="{_fmt(corner_min[1])}" '
        f'width="{_fmt(b.width * tf.scale)}" height="{_fmt(b.height * tf.scale)}" '
        f'fill="none" stroke="{style.bounds_stroke}" stroke-width="1"/>'
    )

    for o in scenario.obstacles:
        cx, cy = tf.to_pixel(o.center)
        lines.append(
            f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(o.radius * tf.scale)}" '
            f'fill="{style.obstacle_fill}" stroke="{style.obstacle_stroke}" '
            f'stroke-width="{style.obstacle_stroke_width}"/>'
        )

    labels_and_colors: list[tuple[str, str]] = []
    for index, (label, points) in enumerate(paths):
        color = style.color_for(label, index)
        labels_and_colors.append((label, color))
        coords = " ".join(
            f"{_fmt(px)},{_fmt(py)}" for px, py in (tf.to_pixel(p) for p in points)
        )
        lines.append(
            f'  <polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{style.path_stroke_width}"/>'
        )

    sx, sy = tf.to_pixel(scenario.start)
    gx, gy = tf.to_pixel(scenario.goal)
    lines.append(_marker_start(sx, sy, style.marker_size, style.start_color))
    lines.append(_marker_goal(gx, gy, style.marker_size, style.goal_color))

    legend_x = style.margin + 10
    legend_y = style.margin + 18
    entries = [("start", style.start_color), ("goal", style.goal_color)] + labels_and_colors
    for i, (label, color) in enumerate(entries):
        y = legend_y + i * 18
        lines.append(
            f'  <line x1="{legend_x}" y1="{y - 4}" x2="{legend_x + 22}" y2="{y - 4}" '
            f'stroke="{color}" stroke-width="3"/>'
        )
        lines.append(
            f'  <text x="{legend_x + 28}" y="{y}" font-family="sans-serif" '
            f'font-size="13">{escape(label)}</text>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
