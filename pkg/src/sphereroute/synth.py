"""Synthetic graph builders used by tests, benchmarks, and examples."""
from __future__ import annotations

import math
import random

import numpy as np
from scipy.spatial import cKDTree

from .graph import Graph, extract_largest_component, is_connected


def path_graph(n: int, weight: float = 1.0) -> Graph:
    u = np.arange(n - 1, dtype=np.int64)
    return Graph.from_arrays(n, u, u + 1, np.full(n - 1, weight))


def grid_graph(rows: int, cols: int, weight_range: tuple[float, float] | None = None,
               seed: int = 0) -> Graph:
    """rows x cols 4-neighbor grid; unit weights, or uniform in
    ``weight_range`` drawn with the given seed."""
    idx = np.arange(rows * cols, dtype=np.int64).reshape(rows, cols)
    us = np.concatenate([idx[:, :-1].ravel(), idx[:-1, :].ravel()])
    vs = np.concatenate([idx[:, 1:].ravel(), idx[1:, :].ravel()])
    if weight_range is None:
        ws = np.ones(us.size)
    else:
        rng = np.random.default_rng(seed)
        lo, hi = weight_range
        ws = rng.uniform(lo, hi, size=us.size)
    return Graph.from_arrays(rows * cols, us, vs, ws)


def random_connected_graph(n: int, extra_edges: int = 0, seed: int = 0,
                           max_weight: int = 9) -> Graph:
    """Random tree plus `extra_edges` random chords; integer weights in
    [1, max_weight] so path costs compare exactly."""
    rng = random.Random(seed)
    edges: dict[tuple[int, int], int] = {}
    for v in range(1, n):
        u = rng.randrange(v)
        edges[(u, v)] = rng.randint(1, max_weight)
    attempts = 0
    while len(edges) < n - 1 + extra_edges and attempts < 20 * (extra_edges + 1):
        attempts += 1
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key in edges:
            continue
        edges[key] = rng.randint(1, max_weight)
    u, v = zip(*edges.keys()) if edges else ((), ())
    return Graph.from_arrays(n, np.array(u, np.int64), np.array(v, np.int64),
                             np.array(list(edges.values()), np.float64))


def random_geometric_graph(n: int, radius: float | None = None, seed: int = 0) -> Graph:
    """Points uniform in the unit square, edges between pairs closer than
    ``radius`` weighted by Euclidean distance; returns the largest
    connected component."""
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    if radius is None:
        radius = math.sqrt(2.2 * math.log(max(n, 2)) / (math.pi * n))
    tree = cKDTree(pts)
    pairs = tree.query_pairs(radius, output_type="ndarray")
    if pairs.size == 0:
        return Graph(1, np.zeros(2, np.int64), np.empty(0, np.int32), np.empty(0, np.float64))
    d = np.linalg.norm(pts[pairs[:, 0]] - pts[pairs[:, 1]], axis=1)
    d = np.maximum(d, 1e-12)
    g = Graph.from_arrays(n, pairs[:, 0].astype(np.int64), pairs[:, 1].astype(np.int64), d)
    if not is_connected(g):
        g = extract_largest_component(g).graph
    return g


def two_cliques(k: int = 4) -> Graph:
    """Two k-cliques joined by a single unit-weight bridge edge."""
    edges = []
    for block in (0, k):
        for i in range(k):
            for j in range(i + 1, k):
                edges.append((block + i, block + j, 1.0))
    edges.append((0, k, 1.0))
    return Graph.from_edges(2 * k, edges)
