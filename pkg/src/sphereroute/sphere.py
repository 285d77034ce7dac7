"""Hop spheres, the two local subgraph views on them, and sphere overlaps."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Graph, SubgraphView, induced_subgraph
from .search import _check_node


@dataclass
class SphereSet:
    """All nodes within ``radius`` hops of ``center``.

    ``dist`` is a full-length array (-1 outside the sphere) that doubles
    as a reusable membership bitmap; ``members`` is the sorted id list and
    ``member_dist`` the matching hop distances.
    """

    center: int
    radius: int
    dist: np.ndarray
    members: np.ndarray
    member_dist: np.ndarray

    def __contains__(self, v: int) -> bool:
        return bool(self.dist[v] >= 0)


def _capped_bfs(g: Graph, v: int, r: int):
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return kernels.bfs_hops(g.indptr, g.indices, g.node_count, v, r)


def sphere(g: Graph, v: int, r: int) -> SphereSet:
    v = _check_node(g, v)
    dist, _ = _capped_bfs(g, v, r)
    members = np.flatnonzero(dist >= 0).astype(np.int32)
    return SphereSet(center=v, radius=int(r), dist=dist,
                     members=members, member_dist=dist[members])


def spherical_subgraph(g: Graph, v: int, r: int) -> SubgraphView:
    """Sphere nodes plus one shortest path to the center per member,
    realized by the deterministic BFS tree; connected, and hop distances
    to the center inside the result equal those in g."""
    v = _check_node(g, v)
    dist, parent = _capped_bfs(g, v, r)
    members = np.flatnonzero(dist >= 0).astype(np.int64)
    local_of = np.full(g.node_count, -1, dtype=np.int32)
    local_of[members] = np.arange(members.size, dtype=np.int32)
    kids = members[parent[members] >= 0]
    pars = parent[kids].astype(np.int64)
    if kids.size:
        # one weight lookup per tree edge, vectorized over CSR rows
        starts = g.indptr[kids]
        lens = g.indptr[kids + 1] - starts
        total = int(lens.sum())
        offsets = np.repeat(np.cumsum(lens) - lens, lens)
        idx = np.repeat(starts, lens) + (np.arange(total, dtype=np.int64) - offsets)
        hit = g.indices[idx] == np.repeat(pars, lens)
        ws = g.weights[idx][hit]
    else:
        ws = np.empty(0, dtype=np.float64)
    sub = Graph.from_arrays(members.size, local_of[kids].astype(np.int64),
                            local_of[pars].astype(np.int64), ws)
    return SubgraphView(sub, g, members.astype(np.int32))


def induced_sphere(g: Graph, v: int, r: int) -> SubgraphView:
    """Sphere nodes plus every original edge between them."""
    return induced_subgraph(g, sphere(g, v, r).members)


def overlap(g: Graph, s: int, t: int, rs: int, rt: int) -> np.ndarray:
    """Sorted ids of nodes within rs hops of s and rt hops of t, computed
    with two capped BFS passes intersected on the membership bitmaps."""
    s = _check_node(g, s, "s")
    t = _check_node(g, t, "t")
    ds, _ = _capped_bfs(g, s, rs)
    dt, _ = _capped_bfs(g, t, rt)
    return np.flatnonzero((ds >= 0) & (dt >= 0)).astype(np.int32)
