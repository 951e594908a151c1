from __future__ import annotations

import math

import pytest

from curveplan.geometry import Obstacle, Point2
from curveplan.scenario import Bounds, Scenario, builtin_scenario, validate_scenario


@pytest.fixture(scope="session")
def scenario1() -> Scenario:
    return builtin_scenario("scenario1")


@pytest.fixture(scope="session")
def empty_scenario() -> Scenario:
    s = Scenario(
        name="empty",
        bounds=Bounds(0.0, 0.0, 100.0, 100.0),
        obstacles=(),
        start=Point2(5.0, 5.0),
        goal=Point2(95.0, 95.0),
    )
    validate_scenario(s)
    return s


def make_annulus_scenario() -> Scenario:
    """Goal enclosed by a ring of pairwise-overlapping circles: no straight
    segment can enter the hole, so every planner must fail."""
    goal = Point2(50.0, 50.0)
    ring_radius = 10.0
    n_ring = 12
    radius = 6.0
    obstacles = tuple(
        Obstacle(
            Point2(
                goal.x + ring_radius * math.cos(2 * math.pi * i / n_ring),
                goal.y + ring_radius * math.sin(2 * math.pi * i / n_ring),
            ),
            radius,
        )
        for i in range(n_ring)
    )
    s = Scenario(
        name="annulus",
        bounds=Bounds(0.0, 0.0, 100.0, 100.0),
        obstacles=obstacles,
        start=Point2(5.0, 5.0),
        goal=goal,
    )
    validate_scenario(s)
    # Adjacent ring circles must overlap, otherwise the ring has gaps and
    # the construction proves nothing.
    for i in range(n_ring):
        a = obstacles[i]
        b = obstacles[(i + 1) % n_ring]
        gap = math.dist(a.center, b.center)
        assert gap < a.radius + b.radius
    return s


@pytest.fixture(scope="session")
def annulus_scenario() -> Scenario:
    return make_annulus_scenario()
