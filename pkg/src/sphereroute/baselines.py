"""Comparison methods: exact full-graph Dijkstra, corridor routing over a
k-cell partition's quotient graph, and Louvain-community routing.

Both partition pipelines share the same shape: build a query-agnostic
partition, take the cheapest cell path on the quotient graph (edge weight
= minimum crossing-edge weight), then run Dijkstra inside the induced
union of those cells. If the target is unreachable inside the corridor it
is widened once by all quotient neighbors, then the search falls back to
the full graph with a flag. The baselines deliberately run single-threaded.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DisconnectedError
from .graph import Graph, induced_subgraph
from .search import Path, _check_node, dijkstra
from .util import derive_seed


@dataclass
class CellPartition:
    """Total assignment of nodes to k connected cells plus the quotient
    graph over cells (edge weight = min crossing weight)."""

    cell_of: np.ndarray
    k: int
    quotient: Graph
    seeds: np.ndarray
    size_ratio: float  # max cell size / min cell size


@dataclass
class CommunityPartition:
    community_of: np.ndarray
    community_count: int
    modularity: float
    level_modularity: list[float]
    quotient: Graph


@dataclass
class BaselineStats:
    corridor_cells: int
    corridor_nodes: int
    quotient_hops: int
    widened: bool
    fallback: bool


def dijkstra_full(g: Graph, s: int, t: int) -> Path:
    """Exact reference route on the full graph; the gap oracle."""
    return dijkstra(g, s, t)


def grow_cells(g: Graph, k: int, seed: int = 0) -> CellPartition:
    """Deterministic seeded region growing: spread k seeds by
    farthest-point sampling on hop distance (the random probe node is
    discarded so the first kept seed is extremal), then run one
    multi-source BFS whose waves claim the cells. Cells are connected
    because each node joins its BFS parent's cell."""
    n = g.node_count
    if not (2 <= k <= n):
        raise ValueError(f"k must be in [2, {n}]")
    rng = random.Random(derive_seed("cells", seed))
    probe = rng.randrange(n)
    dist, _ = kernels.bfs_hops(g.indptr, g.indices, n, probe, -1)
    if np.any(dist < 0):
        raise DisconnectedError("cell growing requires a connected graph")
    seeds = [int(np.argmax(dist))]
    dmin = kernels.bfs_hops(g.indptr, g.indices, n, seeds[0], -1)[0].astype(np.int64)
    dsum = dmin.copy()
    for _ in range(k - 1):
        # primary: farthest from the chosen set; ties: largest total
        # distance to all seeds, then smallest id (keeps grid seeds in the
        # corners instead of on interior tie diagonals)
        cand = np.flatnonzero(dmin == dmin.max())
        cand = cand[dsum[cand] == dsum[cand].max()]
        nxt = int(cand[0])
        seeds.append(nxt)
        d = kernels.bfs_hops(g.indptr, g.indices, n, nxt, -1)[0].astype(np.int64)
        dmin = np.minimum(dmin, d)
        dsum += d
    seeds_arr = np.array(seeds, dtype=np.int32)
    _, owner = kernels.bfs_multi(g.indptr, g.indices, n, seeds_arr, -1)
    sizes = np.bincount(owner, minlength=k)
    quotient = _quotient_min_crossing(g, owner, k)
    return CellPartition(cell_of=owner, k=k, quotient=quotient, seeds=seeds_arr,
                         size_ratio=float(sizes.max() / sizes.min()))


def cells_from_labels(g: Graph, labels) -> CellPartition:
    """Cell partition from an explicit dense label array (used by tests to
    plant adversarial partitions)."""
    labels = np.asarray(labels, dtype=np.int32)
    k = int(labels.max()) + 1
    sizes = np.bincount(labels, minlength=k)
    if np.any(sizes == 0):
        raise ValueError("labels must be dense 0..k-1")
    quotient = _quotient_min_crossing(g, labels, k)
    return CellPartition(cell_of=labels, k=k, quotient=quotient,
                         seeds=np.empty(0, dtype=np.int32),
                         size_ratio=float(sizes.max() / sizes.min()))


def _quotient_min_crossing(g: Graph, labels: np.ndarray, k: int) -> Graph:
    rows = np.repeat(np.arange(g.node_count, dtype=np.int64), np.diff(g.indptr))
    cu = labels[rows].astype(np.int64)
    cv = labels[g.indices].astype(np.int64)
    cross = cu != cv
    cu, cv, w = cu[cross], cv[cross], g.weights[cross]
    lo = np.minimum(cu, cv)
    hi = np.maximum(cu, cv)
    order = np.lexsort((hi, lo))
    lo, hi, w = lo[order], hi[order], w[order]
    if lo.size:
        new_pair = np.ones(lo.size, dtype=bool)
        new_pair[1:] = (lo[1:] != lo[:-1]) | (hi[1:] != hi[:-1])
        starts = np.flatnonzero(new_pair)
        lo, hi, w = lo[starts], hi[starts], np.minimum.reduceat(w, starts)
    return Graph._from_pairs(k, lo, hi, w)


def _coarse_then_refine(g: Graph, s: int, t: int, labels: np.ndarray,
                        quotient: Graph) -> tuple[Path, BaselineStats]:
    cs, ct = int(labels[s]), int(labels[t])
    if cs == ct:
        cells = [cs]
        hops = 0
    else:
        qpath = dijkstra(quotient, cs, ct)
        cells = qpath.nodes
        hops = len(qpath.nodes) - 1
    widened = False
    fallback = False
    cellmask = np.zeros(quotient.node_count, dtype=bool)
    cellmask[cells] = True
    corridor = np.flatnonzero(cellmask[labels])
    view = induced_subgraph(g, corridor)
    try:
        local = dijkstra(view.graph, view.local_of(s), view.local_of(t))
        nodes = [int(p) for p in view.to_parent[local.nodes]]
        path = Path(nodes=nodes, cost=local.cost)
    except (DisconnectedError, KeyError):
        widened = True
        for c in np.flatnonzero(cellmask):
            nbrs, _ = quotient.neighbors(int(c))
            cellmask[nbrs] = True
        corridor = np.flatnonzero(cellmask[labels])
        view = induced_subgraph(g, corridor)
        try:
            local = dijkstra(view.graph, view.local_of(s), view.local_of(t))
            nodes = [int(p) for p in view.to_parent[local.nodes]]
            path = Path(nodes=nodes, cost=local.cost)
        except (DisconnectedError, KeyError):
            fallback = True
            path = dijkstra_full(g, s, t)
    stats = BaselineStats(
        corridor_cells=int(cellmask.sum()),
        corridor_nodes=int(corridor.size),
        quotient_hops=hops,
        widened=widened,
        fallback=fallback,
    )
    return path, stats


def corridor_route(g: Graph, s: int, t: int,
                   part: CellPartition) -> tuple[Path, BaselineStats]:
    """Cheapest cell path on the quotient, then Dijkstra inside the
    corridor (the union of those cells)."""
    s = _check_node(g, s, "s")
    t = _check_node(g, t, "t")
    return _coarse_then_refine(g, s, t, part.cell_of, part.quotient)


def louvain_route(g: Graph, s: int, t: int,
                  part: CommunityPartition) -> tuple[Path, BaselineStats]:
    """Coarse route on the community graph, refined by Dijkstra on the
    union of the communities along it."""
    s = _check_node(g, s, "s")
    t = _check_node(g, t, "t")
    return _coarse_then_refine(g, s, t, part.community_of, part.quotient)


# -- Louvain community detection -------------------------------------------


def modularity(g: Graph, labels, resolution: float = 1.0) -> float:
    """Standard weighted modularity of a node labeling."""
    labels = np.asarray(labels, dtype=np.int64)
    w2 = float(g.weights.sum())  # both arc directions: 2 * total edge weight
    if w2 == 0.0:
        return 0.0
    rows = np.repeat(np.arange(g.node_count, dtype=np.int64), np.diff(g.indptr))
    internal = labels[rows] == labels[g.indices]
    c = int(labels.max()) + 1
    in_c = np.bincount(labels[rows][internal], weights=g.weights[internal], minlength=c)
    deg = np.bincount(rows, weights=g.weights, minlength=g.node_count)
    tot = np.bincount(labels, weights=deg, minlength=c)
    return float(np.sum(in_c / w2 - resolution * (tot / w2) ** 2))


def _one_level(adj: list[dict[int, float]], order: list[int], m2: float,
               resolution: float) -> list[int]:
    n = len(adj)
    comm = list(range(n))
    k = [0.0] * n
    for i, nbrs in enumerate(adj):
        deg = 0.0
        for j, w in nbrs.items():
            deg += 2.0 * w if j == i else w
        k[i] = deg
    tot = k.copy()
    while True:
        moves = 0
        for i in order:
            ci = comm[i]
            nc: dict[int, float] = {}
            for j, w in adj[i].items():
                if j != i:
                    cj = comm[j]
                    nc[cj] = nc.get(cj, 0.0) + w
            tot[ci] -= k[i]
            best_c = ci
            best_gain = nc.get(ci, 0.0) - resolution * tot[ci] * k[i] / m2
            for c in sorted(nc):
                if c == ci:
                    continue
                gain = nc[c] - resolution * tot[c] * k[i] / m2
                if gain > best_gain:
                    best_gain = gain
                    best_c = c
            comm[i] = best_c
            tot[best_c] += k[i]
            if best_c != ci:
                moves += 1
        if moves == 0:
            return comm


def _aggregate(adj: list[dict[int, float]], comm: list[int],
               count: int) -> list[dict[int, float]]:
    new_adj: list[dict[int, float]] = [dict() for _ in range(count)]
    for i, nbrs in enumerate(adj):
        ci = comm[i]
        row = new_adj[ci]
        for j, w in nbrs.items():
            cj = comm[j]
            if j == i:
                row[ci] = row.get(ci, 0.0) + w
            elif ci == cj:
                # both arc directions visit this edge; store it once
                row[ci] = row.get(ci, 0.0) + w / 2.0
            else:
                row[cj] = row.get(cj, 0.0) + w
    return new_adj


def louvain(g: Graph, seed: int = 0, resolution: float = 1.0,
            min_gain: float = 1e-7) -> CommunityPartition:
    """Two-phase Louvain with raw edge weights: seeded-permutation local
    moves until no gain, community aggregation, repeated until the
    modularity improvement drops below ``min_gain``."""
    n = g.node_count
    adj: list[dict[int, float]] = []
    for u in range(n):
        lo, hi = int(g.indptr[u]), int(g.indptr[u + 1])
        adj.append({int(v): float(w) for v, w in zip(g.indices[lo:hi], g.weights[lo:hi])})
    m2 = float(g.weights.sum())
    labels = np.arange(n, dtype=np.int64)
    if m2 == 0.0:
        return CommunityPartition(labels.astype(np.int32), n, 0.0, [0.0],
                                  _quotient_min_crossing(g, labels, n))
    level_mods: list[float] = []
    prev_mod = modularity(g, labels, resolution)
    level = 0
    while True:
        rng = random.Random(derive_seed("louvain", seed, level))
        order = list(range(len(adj)))
        rng.shuffle(order)
        comm = _one_level(adj, order, m2, resolution)
        uniq = sorted(set(comm))
        remap = {c: i for i, c in enumerate(uniq)}
        dense = [remap[c] for c in comm]
        labels = np.array(dense, dtype=np.int64)[labels]
        mod = modularity(g, labels, resolution)
        level_mods.append(mod)
        if mod - prev_mod < min_gain:
            break
        prev_mod = mod
        adj = _aggregate(adj, dense, len(uniq))
        level += 1
    count = int(labels.max()) + 1
    return CommunityPartition(
        community_of=labels.astype(np.int32),
        community_count=count,
        modularity=float(level_mods[-1]),
        level_modularity=level_mods,
        quotient=_quotient_min_crossing(g, labels, count),
    )
