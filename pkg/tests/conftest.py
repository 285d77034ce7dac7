from __future__ import annotations

import itertools

import numpy as np
import pytest

from sphereroute import Graph, walk_cost
from sphereroute.synth import grid_graph, path_graph, random_connected_graph


@pytest.fixture
def lens8() -> tuple[Graph, dict[str, int]]:
    """Eight-node reference graph: two hub nodes sit two hops from either
    terminal, so the radius-(2,2) spheres overlap in exactly those two
    anchor candidates and the terminals are four hops apart."""
    names = {"s": 0, "u2": 1, "u3": 2, "a": 3, "ap": 4, "u5": 5, "u6": 6, "t": 7}
    g = Graph.from_edges(8, [
        (names["s"], names["u2"], 1.0),
        (names["s"], names["u3"], 1.0),
        (names["u2"], names["a"], 1.0),
        (names["u3"], names["a"], 1.0),
        (names["a"], names["u5"], 1.0),
        (names["u2"], names["ap"], 1.0),
        (names["ap"], names["u5"], 1.0),
        (names["u5"], names["u6"], 1.0),
        (names["u5"], names["t"], 1.0),
        (names["u6"], names["t"], 1.0),
    ])
    return g, names


@pytest.fixture
def star5() -> Graph:
    """Star around node 0 with two chords through node 2 and one node at
    hop distance two; separates the tree view of a unit sphere from the
    induced view."""
    return Graph.from_edges(5, [
        (0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0),
        (1, 2, 1.0), (3, 2, 1.0), (2, 4, 1.0),
    ])


def assert_route_feasible(g: Graph, nodes, cost: float) -> None:
    assert len(nodes) >= 1
    total = walk_cost(g, nodes)
    assert cost == pytest.approx(total, rel=1e-9)


def brute_force_min_cost(g: Graph, u: int, w: int) -> float | None:
    """Exhaustive simple-path enumeration; the independent oracle for
    Dijkstra. Only viable on tiny graphs."""
    best: float | None = None
    visited = [False] * g.node_count
    visited[u] = True

    def rec(x: int, cost: float) -> None:
        nonlocal best
        if x == w:
            if best is None or cost < best:
                best = cost
            return
        if best is not None and cost >= best:
            return  # sound: weights are strictly positive
        nbrs, ws = g.neighbors(x)
        for v, wt in zip(nbrs, ws):
            v = int(v)
            if not visited[v]:
                visited[v] = True
                rec(v, cost + float(wt))
                visited[v] = False

    rec(u, 0.0)
    return best


def small_random_graphs(count: int, max_nodes: int = 12, seed: int = 0):
    for i in range(count):
        n = 2 + (seed + i) % (max_nodes - 1)
        yield random_connected_graph(n, extra_edges=(i % 4) * 2, seed=seed * 1000 + i)


def all_set_partitions(items: list[int]):
    """Every partition of `items` into nonempty blocks (Bell-number many)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        yield part + [[first]]


GRAPH_FAMILIES = {
    "path": lambda seed: path_graph(5 + seed % 40),
    "grid": lambda seed: grid_graph(3 + seed % 10, 3 + (seed // 2) % 12,
                                    weight_range=(1, 10), seed=seed),
    "tree_plus": lambda seed: random_connected_graph(10 + seed % 60,
                                                     extra_edges=seed % 15, seed=seed),
}


def iter_random_cases(count: int, seed: int = 0):
    """(graph, s, t) cases cycling over the synthetic families, with
    terminals guaranteed distinct and connected."""
    import random as _random

    from sphereroute import sample_st

    families = list(GRAPH_FAMILIES.values())
    rng = _random.Random(seed)
    for i in range(count):
        g = families[i % len(families)](rng.randrange(1000))
        if g.node_count < 2:
            continue
        s, t = sample_st(g, rng.randrange(10**6))
        yield g, s, t
