"""Solve ordered leaf tasks with a pluggable solver and concatenate the
subpaths at their shared anchors into the global route.

Tasks are independent read-only computations over disjoint subgraph views
sharing one immutable parent graph, so they may run on a worker pool; the
assembled route is identical for any worker count because results are
collected by task index and all randomness was already fixed during
partitioning.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .errors import InvariantError
from .graph import Graph
from .partition import PartitionConfig, RuleSet, TaskTriple, sph_partition
from .search import Path, _check_node, dijkstra


SolverFn = Callable[[Graph, int, int], Path]

_SOLVERS: dict[str, SolverFn] = {"dijkstra": dijkstra}


def register_solver(name: str, fn: SolverFn) -> None:
    """Register a named solving strategy applied to (subgraph, entry, exit)."""
    _SOLVERS[name] = fn


def solver_names() -> list[str]:
    return sorted(_SOLVERS)


@dataclass(frozen=True)
class SolverSpec:
    name: str = "dijkstra"

    def resolve(self) -> SolverFn:
        try:
            return _SOLVERS[self.name]
        except KeyError:
            raise ValueError(f"unknown solver {self.name!r}; "
                             f"registered: {', '.join(solver_names())}") from None


@dataclass
class Segment:
    entry: int
    exit: int
    cost: float
    subgraph_nodes: int
    solve_s: float


@dataclass
class Route:
    """Global route in parent-graph ids; shared anchors appear once."""

    nodes: list[int]
    cost: float
    segments: list[Segment]


@dataclass
class RunStats:
    partition_s: float
    solve_s: float
    concat_s: float
    total_s: float
    task_count: int
    max_subgraph_nodes: int
    forced_leaves: int
    per_task_solve_s: list[float] = field(default_factory=list)


def default_workers() -> int:
    return os.cpu_count() or 1


def _solve_one(task: TaskTriple, fn: SolverFn):
    t0 = time.perf_counter()
    lu = task.subgraph.local_of(task.entry)
    lw = task.subgraph.local_of(task.exit)
    path = fn(task.subgraph.graph, lu, lw)
    nodes = [int(p) for p in task.subgraph.to_parent[path.nodes]]
    return nodes, float(path.cost), time.perf_counter() - t0


def _solve_all(tasks: list[TaskTriple], fn: SolverFn, workers: int):
    if workers <= 1 or len(tasks) == 1:
        return [_solve_one(t, fn) for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: _solve_one(t, fn), tasks))


def _concatenate(results) -> tuple[list[int], float]:
    nodes = list(results[0][0])
    cost = results[0][1]
    for seg_nodes, seg_cost, _ in results[1:]:
        if seg_nodes[0] != nodes[-1]:
            raise InvariantError(
                f"segment junction mismatch: {nodes[-1]} then {seg_nodes[0]}")
        nodes.extend(seg_nodes[1:])  # drop the repeated anchor
        cost += seg_cost
    return nodes, cost


def solve_tasks(g: Graph, tasks: list[TaskTriple],
                solver: SolverSpec = SolverSpec(), workers: int = 1) -> Route:
    """Solve each task inside its own subgraph and fold the subpaths left
    to right, dropping the duplicated junction node at each anchor."""
    if not tasks:
        raise ValueError("no tasks to solve")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    for a, b in zip(tasks[:-1], tasks[1:]):
        if a.exit != b.entry:
            raise ValueError(f"tasks do not chain: exit {a.exit} then entry {b.entry}")
    fn = solver.resolve()
    results = _solve_all(tasks, fn, workers)
    nodes, cost = _concatenate(results)
    segments = [
        Segment(entry=t.entry, exit=t.exit, cost=r[1],
                subgraph_nodes=t.subgraph.graph.node_count, solve_s=r[2])
        for t, r in zip(tasks, results)
    ]
    return Route(nodes=nodes, cost=cost, segments=segments)


def route(g: Graph, s: int, t: int, cfg: PartitionConfig | None = None,
          solver: SolverSpec = SolverSpec(), workers: int = 1,
          rules: RuleSet | None = None) -> tuple[Route, RunStats]:
    """Partition, solve the leaf tasks (optionally in parallel), and
    concatenate; wall-clock covers all three phases."""
    s = _check_node(g, s, "s")
    t = _check_node(g, t, "t")
    if s == t:
        raise ValueError("terminals must differ")
    cfg = cfg or PartitionConfig()
    t0 = time.perf_counter()
    tasks = sph_partition(g, s, t, cfg, rules)
    t1 = time.perf_counter()
    fn = solver.resolve()
    results = _solve_all(tasks, fn, workers)
    t2 = time.perf_counter()
    nodes, cost = _concatenate(results)
    t3 = time.perf_counter()
    segments = [
        Segment(entry=task.entry, exit=task.exit, cost=r[1],
                subgraph_nodes=task.subgraph.graph.node_count, solve_s=r[2])
        for task, r in zip(tasks, results)
    ]
    rt = Route(nodes=nodes, cost=cost, segments=segments)
    stats = RunStats(
        partition_s=t1 - t0,
        solve_s=t2 - t1,
        concat_s=t3 - t2,
        total_s=t3 - t0,
        task_count=len(tasks),
        max_subgraph_nodes=max(tk.subgraph.graph.node_count for tk in tasks),
        forced_leaves=sum(1 for tk in tasks if tk.forced),
        per_task_solve_s=[r[2] for r in results],
    )
    if rt.nodes[0] != s or rt.nodes[-1] != t:
        raise InvariantError("assembled route does not span the terminals")
    return rt, stats
