"""Distance primitives: hop-count BFS and weighted point-to-point Dijkstra.

These are thin wrappers around the CSR kernels that add id validation and
path reconstruction. Everything here is a pure function over immutable
graphs; concurrent searches on the same Graph are safe.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DisconnectedError
from .graph import Graph


@dataclass
class HopDistances:
    """BFS result: hop counts and the BFS-tree parent of each reached node.

    ``dist`` and ``parent`` are full-length int32 arrays with -1 for
    unreached nodes. When ``cap`` is set, every node at true hop distance
    greater than ``cap`` is unreached.
    """

    source: int
    dist: np.ndarray
    parent: np.ndarray
    cap: int | None = None

    def distance(self, v: int) -> int | None:
        d = int(self.dist[v])
        return None if d < 0 else d


@dataclass
class Path:
    nodes: list[int]
    cost: float


def _check_node(g: Graph, v: int, name: str = "node") -> int:
    v = int(v)
    if not (0 <= v < g.node_count):
        raise ValueError(f"{name} id {v} out of range for {g!r}")
    return v


def bfs_hops(g: Graph, v: int, cap: int | None = None) -> HopDistances:
    """Exact hop distances from v, up to ``cap`` hops when given."""
    v = _check_node(g, v)
    if cap is not None and cap < 0:
        raise ValueError("cap must be nonnegative")
    dist, parent = kernels.bfs_hops(g.indptr, g.indices, g.node_count, v,
                                    -1 if cap is None else int(cap))
    return HopDistances(source=v, dist=dist, parent=parent, cap=cap)


def hop_distance(g: Graph, s: int, t: int) -> int:
    """Exact hop distance via alternating bidirectional BFS."""
    s = _check_node(g, s, "s")
    t = _check_node(g, t, "t")
    d = kernels.hop_distance_bidir(g.indptr, g.indices, g.node_count, s, t)
    if d < 0:
        raise DisconnectedError(f"nodes {s} and {t} are disconnected")
    return int(d)


def dijkstra(g: Graph, u: int, w: int) -> Path:
    """Minimum-cost u-w path; priority ties break toward the smaller node
    id, so the route is deterministic."""
    u = _check_node(g, u, "u")
    w = _check_node(g, w, "w")
    if u == w:
        return Path(nodes=[u], cost=0.0)
    dist, parent = kernels.dijkstra(g.indptr, g.indices, g.weights, g.node_count, u, w)
    if not np.isfinite(dist[w]):
        raise DisconnectedError(f"node {w} unreachable from {u}")
    nodes = [w]
    x = w
    while x != u:
        x = int(parent[x])
        nodes.append(x)
    nodes.reverse()
    return Path(nodes=nodes, cost=float(dist[w]))
