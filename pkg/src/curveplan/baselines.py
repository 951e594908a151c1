"""Reference RRT and PRM planners instrumented with the same node-count
metric and PlanResult type as the curvature-constrained planner.

Both planners are pure functions of (scenario, config, seed). Nearest
neighbor queries use a linear scan (first lowest index wins); node counts
at desk scale do not justify a spatial index, and the helpers keep the
query isolated so one could be added without touching the planner API.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .dccppa import MODE_START, PlanResult
from .geometry import Obstacle, Point2, Segment, distance, segment_intersects_obstacle
from .scenario import Scenario, make_rng

MODE_TREE = "tree"
MODE_ROADMAP = "roadmap"

# Sampling iterations allowed per tree node before rrt gives up; bounds the
# loop when every extension collides (the node budget alone would not).
_RRT_SAMPLE_BUDGET_FACTOR = 10

# Draws allowed per roadmap sample before prm gives up on a crowded space.
_PRM_SAMPLE_BUDGET_FACTOR = 200


@dataclass(frozen=True)
class RrtConfig:
    step_size: float = 1.0
    goal_bias: float = 0.3
    goal_tolerance: float = 1.0
    max_nodes: int = 10_000

    def __post_init__(self) -> None:
        if self.step_size <= 0 or self.goal_tolerance <= 0:
            raise ValueError("step_size and goal_tolerance must be > 0")
        if not 0.0 <= self.goal_bias <= 1.0:
            raise ValueError("goal_bias must be in [0, 1]")
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")


@dataclass(frozen=True)
class PrmConfig:
    n_samples: int = 300
    k_neighbors: int = 10
    goal_tolerance: float = 1.0

    def __post_init__(self) -> None:
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if self.k_neighbors < 1:
            raise ValueError("k_neighbors must be >= 1")
        if self.k_neighbors >= self.n_samples:
            raise ValueError("k_neighbors must be < n_samples")
        if self.goal_tolerance <= 0:
            raise ValueError("goal_tolerance must be > 0")


@dataclass(frozen=True)
class Tree:
    """RRT search tree: parents[i] is the parent index, -1 for the root."""

    nodes: tuple[Point2, ...]
    parents: tuple[int, ...]


@dataclass(frozen=True)
class Roadmap:
    """PRM roadmap: undirected neighbor lists, index-sorted. Node 0 is the
    start, node 1 the goal, the rest are samples."""

    nodes: tuple[Point2, ...]
    neighbors: tuple[tuple[int, ...], ...]


def _segment_free(a: Point2, b: Point2, obstacles: tuple[Obstacle, ...]) -> bool:
    seg = Segment(a, b)
    return not any(segment_intersects_obstacle(seg, o) for o in obstacles)


def _uniform_point(rng: np.random.Generator, scenario: Scenario) -> Point2:
    b = scenario.bounds
    return Point2(rng.uniform(b.min_x, b.max_x), rng.uniform(b.min_y, b.max_y))


def rrt_tree(scenario: Scenario, config: RrtConfig, seed: int) -> tuple[Tree, int | None]:
    """Grow the tree; returns it with the index of the goal-reaching node,
    or None if the node or sampling budget ran out first."""
    rng = make_rng(seed)
    goal = scenario.goal
    obstacles = scenario.obstacles

    nodes: list[Point2] = [scenario.start]
    parents: list[int] = [-1]
    if distance(scenario.start, goal) <= config.goal_tolerance:
        return Tree(tuple(nodes), tuple(parents)), 0

    for _ in range(config.max_nodes * _RRT_SAMPLE_BUDGET_FACTOR):
        if len(nodes) >= config.max_nodes:
            break
        if rng.random() < config.goal_bias:
            sample = goal
        else:
            sample = _uniform_point(rng, scenario)
        nearest = min(range(len(nodes)), key=lambda i: distance(nodes[i], sample))
        anchor = nodes[nearest]
        gap = distance(anchor, sample)
        if gap == 0.0:
            continue
        step = min(config.step_size, gap)
        new = Point2(
            anchor.x + step * (sample.x - anchor.x) / gap,
            anchor.y + step * (sample.y - anchor.y) / gap,
        )
        if not _segment_free(anchor, new, obstacles):
            continue
        nodes.append(new)
        parents.append(nearest)
        if distance(new, goal) <= config.goal_tolerance:
            return Tree(tuple(nodes), tuple(parents)), len(nodes) - 1
    return Tree(tuple(nodes), tuple(parents)), None


def rrt_plan(scenario: Scenario, config: RrtConfig, seed: int) -> PlanResult:
    """Standard RRT: sample (goal with probability goal_bias, else uniform),
    extend the nearest node by at most step_size, keep collision-free
    extensions, stop when a node lands within goal_tolerance of the goal.

    nodes_expanded counts tree nodes grown beyond the root.
    """
    tree, goal_index = rrt_tree(scenario, config, seed)
    expanded = len(tree.nodes) - 1
    if goal_index is None:
        return PlanResult(
            path=(scenario.start,),
            nodes_expanded=expanded,
            iterations_used=expanded,
            succeeded=False,
            committed_nodes=expanded,
            rejected_samples=0,
            modes=(MODE_START,),
        )
    indices = [goal_index]
    while tree.parents[indices[-1]] != -1:
        indices.append(tree.parents[indices[-1]])
    indices.reverse()
    path = tuple(tree.nodes[i] for i in indices)
    return PlanResult(
        path=path,
        nodes_expanded=expanded,
        iterations_used=expanded,
        succeeded=True,
        committed_nodes=expanded,
        rejected_samples=0,
        modes=(MODE_START,) + (MODE_TREE,) * (len(path) - 1),
    )


def prm_roadmap(scenario: Scenario, config: PrmConfig, seed: int) -> Roadmap | None:
    """Sample n_samples collision-free points, prepend start and goal, and
    connect every node to its k nearest neighbors by collision-free
    straight edges. Returns None if sampling exhausts its budget."""
    rng = make_rng(seed)
    obstacles = scenario.obstacles

    samples: list[Point2] = []
    budget = config.n_samples * _PRM_SAMPLE_BUDGET_FACTOR
    while len(samples) < config.n_samples:
        if budget <= 0:
            return None
        budget -= 1
        p = _uniform_point(rng, scenario)
        if any(distance(p, o.center) < o.radius for o in obstacles):
            continue
        samples.append(p)

    nodes = [scenario.start, scenario.goal] + samples
    n = len(nodes)
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        by_gap = sorted(
            (j for j in range(n) if j != i),
            key=lambda j: (distance(nodes[i], nodes[j]), j),
        )
        for j in by_gap[: config.k_neighbors]:
            if j in neighbor_sets[i]:
                continue
            if _segment_free(nodes[i], nodes[j], obstacles):
                neighbor_sets[i].add(j)
                neighbor_sets[j].add(i)
    return Roadmap(
        nodes=tuple(nodes),
        neighbors=tuple(tuple(sorted(s)) for s in neighbor_sets),
    )


def shortest_path(roadmap: Roadmap, source: int, target: int) -> tuple[list[int], float] | None:
    """Dijkstra over the roadmap with Euclidean edge costs.

    Heap entries are (cost, node index), so ties break lexicographically on
    the node index and the search is deterministic. Returns (node indices,
    total cost) or None when target is unreachable.
    """
    n = len(roadmap.nodes)
    best = [float("inf")] * n
    pred = [-1] * n
    done = [False] * n
    best[source] = 0.0
    heap: list[tuple[float, int]] = [(0.0, source)]
    while heap:
        cost, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        if u == target:
            break
        for v in roadmap.neighbors[u]:
            if done[v]:
                continue
            alt = cost + distance(roadmap.nodes[u], roadmap.nodes[v])
            if alt < best[v]:
                best[v] = alt
                pred[v] = u
                heapq.heappush(heap, (alt, v))
    if not done[target]:
        return None
    indices = [target]
    while indices[-1] != source:
        indices.append(pred[indices[-1]])
    indices.reverse()
    return indices, best[target]


def prm_plan(scenario: Scenario, config: PrmConfig, seed: int) -> PlanResult:
    """PRM: build the roadmap, then run the shortest-path search from start
    to goal.

    nodes_expanded is the full roadmap size (n_samples + 2) whenever the
    roadmap was built, because constructing it is the dominant cost; it
    drops to 2 (start and goal) when sampling gives up before the roadmap
    exists.
    """
    roadmap = prm_roadmap(scenario, config, seed)
    if roadmap is None:
        return PlanResult(
            path=(scenario.start,),
            nodes_expanded=2,
            iterations_used=0,
            succeeded=False,
            committed_nodes=0,
            rejected_samples=0,
            modes=(MODE_START,),
        )
    expanded = len(roadmap.nodes)
    found = shortest_path(roadmap, 0, 1)
    if found is None:
        return PlanResult(
            path=(scenario.start,),
            nodes_expanded=expanded,
            iterations_used=0,
            succeeded=False,
            committed_nodes=0,
            rejected_samples=0,
            modes=(MODE_START,),
        )
    indices, _ = found
    path = tuple(roadmap.nodes[i] for i in indices)
    return PlanResult(
        path=path,
        nodes_expanded=expanded,
        iterations_used=0,
        succeeded=True,
        committed_nodes=len(path) - 1,
        rejected_samples=0,
        modes=(MODE_START,) + (MODE_ROADMAP,) * (len(path) - 1),
    )
