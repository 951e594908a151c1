"""Exact 2D primitives shared by every planner: distances, point/segment
vs. circle tests, and polyline collision checks.

All obstacles are circles; the collision convention is strict: a point
exactly on an obstacle boundary is admissible, so perimeter points can be
used as waypoints.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence


class Point2(NamedTuple):
    """A position in the 2D workspace."""

    x: float
    y: float


class Obstacle(NamedTuple):
    """A circular obstacle."""

    center: Point2
    radius: float


class Segment(NamedTuple):
    """A straight edge between two workspace points. May be degenerate (a == b)."""

    a: Point2
    b: Point2


def distance(p: Point2, q: Point2) -> float:
    """Euclidean distance between two points."""
    return math.hypot(p.x - q.x, p.y - q.y)


def point_in_obstacle(p: Point2, obstacle: Obstacle) -> bool:
    """True iff p lies strictly inside the obstacle (boundary points are outside)."""
    return distance(p, obstacle.center) < obstacle.radius


def segment_point_distance(p: Point2, seg: Segment) -> float:
    """Minimum distance from p to the closed segment.

    Projects p onto the segment's supporting line and clamps the parameter
    to [0, 1]; a degenerate segment is treated as a point.
    """
    ax, ay = seg.a
    bx, by = seg.b
    dx = bx - ax
    dy = by - ay
    length_sq = dx * dx + dy * dy
    if length_sq == 0.0:
        return distance(p, seg.a)
    t = ((p.x - ax) * dx + (p.y - ay) * dy) / length_sq
    t = max(0.0, min(1.0, t))
    return math.hypot(p.x - (ax + t * dx), p.y - (ay + t * dy))


def segment_intersects_obstacle(seg: Segment, obstacle: Obstacle) -> bool:
    """True iff the closed segment passes strictly inside the obstacle."""
    return segment_point_distance(obstacle.center, seg) < obstacle.radius


def segment_is_free(a: Point2, b: Point2, obstacles: Iterable[Obstacle]) -> bool:
    """True iff the segment a-b clears every obstacle."""
    seg = Segment(a, b)
    return not any(segment_intersects_obstacle(seg, o) for o in obstacles)


def path_collides(path: Sequence[Point2], obstacles: Sequence[Obstacle]) -> bool:
    """True iff any path point lies inside an obstacle or any consecutive
    segment intersects one.

    A single-point path collides only if that point is inside an obstacle.
    """
    if not path:
        raise ValueError("path must contain at least one point")
    for p in path:
        for o in obstacles:
            if point_in_obstacle(p, o):
                return True
    for a, b in zip(path, path[1:]):
        seg = Segment(a, b)
        for o in obstacles:
            if segment_intersects_obstacle(seg, o):
                return True
    return False
