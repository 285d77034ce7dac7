"""Query-aware recursive spherical partitioning.

A partition cut shrinks a balanced pair of hop-sphere radii around the
terminals until one more shrink would drop the sphere overlap below the
configured minimum size, then picks an anchor inside that last overlap.
Recursing on the two induced spheres until every side respects the radius
cap yields an ordered chain of independent "route u to w inside H" tasks
whose solutions concatenate into a feasible global route with no boundary
repair, because every cut lies inside an overlap.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import kernels
from .errors import RuleViolationError, StalledRuleError
from .graph import Graph, SubgraphView, induced_subgraph
from .search import _check_node, hop_distance
from .util import derive_seed


class RadiusPair(NamedTuple):
    rs: int
    rt: int


@dataclass(frozen=True)
class RuleSet:
    """The three partition-cut rules.

    ``staru(g, s, t)`` picks starting radii whose spheres already overlap;
    ``decru(pair)`` shrinks the pair without ever growing a coordinate;
    ``anru(candidates, rng)`` picks the anchor from the overlap.
    """

    staru: Callable[[Graph, int, int], RadiusPair]
    decru: Callable[[RadiusPair], RadiusPair]
    anru: Callable[[np.ndarray, random.Random], int]


@dataclass(frozen=True)
class PartitionConfig:
    """Partition parameters.

    ``r_max`` caps leaf sphere radii; ``v_max``/``e_max`` optionally force
    further splitting of oversized leaves; ``eps_overlap`` generalizes the
    "nonempty overlap" loop guard to a minimum overlap size; ``delta_r``
    is the shrink step; ``l_max`` caps recursion depth; ``k_anchor`` is
    fixed at one anchor per cut.
    """

    r_max: int = 1800
    v_max: int | None = None
    e_max: int | None = None
    eps_overlap: int = 1
    delta_r: int = 1
    l_max: int | None = None
    k_anchor: int = 1
    rng_seed: int = 0

    def __post_init__(self):
        if self.r_max < 1:
            raise ValueError("r_max must be >= 1")
        if self.eps_overlap < 1:
            raise ValueError("eps_overlap must be >= 1")
        if self.delta_r < 1:
            raise ValueError("delta_r must be >= 1")
        if self.k_anchor != 1:
            raise ValueError("only k_anchor=1 is supported")
        if self.l_max is not None and self.l_max < 1:
            raise ValueError("l_max must be >= 1 when set")
        if self.v_max is not None and self.v_max < 1:
            raise ValueError("v_max must be >= 1 when set")
        if self.e_max is not None and self.e_max < 0:
            raise ValueError("e_max must be >= 0 when set")


@dataclass
class CutResult:
    """Last radius pair whose overlap met the size threshold, that overlap
    (sorted ids), and the chosen anchor."""

    radii: RadiusPair
    overlap: np.ndarray
    anchor: int


@dataclass(frozen=True)
class TaskTriple:
    """Independent leaf subproblem: route ``entry`` to ``exit`` inside
    ``subgraph``. Ids are parent-graph ids; ``radius`` is the sphere
    radius that built the subgraph (None for whole-problem leaves) and
    ``forced`` marks leaves emitted by a progress or depth guard rather
    than the radius cap."""

    subgraph: SubgraphView
    entry: int
    exit: int
    depth: int
    radius: int | None = None
    forced: bool = False


def default_decru(pair: RadiusPair, delta_r: int = 1) -> RadiusPair:
    """Shrink the larger coordinate (rs on ties), clamped at zero. With
    delta_r=1 this keeps |rs - rt| <= 1 from a balanced start."""
    rs, rt = pair
    if rs >= rt:
        return RadiusPair(max(rs - delta_r, 0), rt)
    return RadiusPair(rs, max(rt - delta_r, 0))


def default_staru(g: Graph, s: int, t: int) -> RadiusPair:
    """Balanced start (ceil(d/2), ceil(d/2)); rs + rt >= d guarantees the
    spheres overlap."""
    d = hop_distance(g, s, t)
    r = (d + 1) // 2
    return RadiusPair(r, r)


def anchor_uniform(candidates, rng: random.Random) -> int:
    """Uniform draw over the sorted candidate ids, so the pick depends
    only on the rng state, not on set iteration order."""
    cand = np.sort(np.asarray(list(candidates) if not isinstance(candidates, np.ndarray)
                              else candidates))
    if cand.size == 0:
        raise ValueError("empty candidate set")
    return int(cand[rng.randrange(cand.size)])


def default_rules(delta_r: int = 1) -> RuleSet:
    return RuleSet(
        staru=default_staru,
        decru=lambda p: default_decru(p, delta_r),
        anru=anchor_uniform,
    )


def _cut_with_distances(g: Graph, s: int, t: int, rules: RuleSet,
                        cfg: PartitionConfig, rng: random.Random):
    """Run one partition cut; also return the two capped BFS distance
    arrays so callers can build the side spheres without re-searching."""
    start = rules.staru(g, s, t)
    rs0, rt0 = int(start[0]), int(start[1])
    if rs0 < 0 or rt0 < 0:
        raise RuleViolationError(f"starting rule returned negative radii {start}")
    ds, _ = kernels.bfs_hops(g.indptr, g.indices, g.node_count, s, rs0)
    dt, _ = kernels.bfs_hops(g.indptr, g.indices, g.node_count, t, rt0)
    lens_ids = np.flatnonzero((ds >= 0) & (dt >= 0))
    dsl = ds[lens_ids].astype(np.int64)
    dtl = dt[lens_ids].astype(np.int64)
    # 2-d prefix sums make every overlap size along the shrink trajectory
    # an O(1) lookup instead of a fresh pair of BFS passes
    hist = np.zeros((rs0 + 1, rt0 + 1), dtype=np.int64)
    np.add.at(hist, (dsl, dtl), 1)
    cum = hist.cumsum(axis=0).cumsum(axis=1)

    def ov_size(pair: RadiusPair) -> int:
        rs, rt = pair
        if rs < 0 or rt < 0:
            return 0
        return int(cum[min(rs, rs0), min(rt, rt0)])

    eps = cfg.eps_overlap
    cur = RadiusPair(rs0, rt0)
    if ov_size(cur) < eps:
        raise RuleViolationError(
            f"starting radii {cur} give overlap of size {ov_size(cur)} < {eps}")
    last = cur
    while ov_size(cur) >= eps:
        last = cur
        stepped = rules.decru(cur)
        nxt = RadiusPair(int(stepped[0]), int(stepped[1]))
        if nxt.rs > cur.rs or nxt.rt > cur.rt or nxt.rs < 0 or nxt.rt < 0:
            raise RuleViolationError(f"decrement rule grew {cur} to {nxt}")
        if nxt == cur:
            raise StalledRuleError(f"decrement rule stalled at {cur}")
        cur = nxt
    members = lens_ids[(dsl <= last.rs) & (dtl <= last.rt)].astype(np.int32)
    anchor = int(rules.anru(members, rng))
    if ds[anchor] < 0 or ds[anchor] > last.rs or dt[anchor] < 0 or dt[anchor] > last.rt:
        raise RuleViolationError(f"anchor rule picked {anchor} outside the overlap")
    return CutResult(radii=last, overlap=members, anchor=anchor), ds, dt


def partition_cut(g: Graph, s: int, t: int, rules: RuleSet | None = None,
                  cfg: PartitionConfig | None = None,
                  rng: random.Random | None = None) -> CutResult:
    """Shrink from the starting radii until the overlap would fall below
    ``cfg.eps_overlap``, returning the last admissible pair, its overlap,
    and an anchor drawn from it."""
    s = _check_node(g, s, "s")
    t = _check_node(g, t, "t")
    if s == t:
        raise ValueError("terminals must differ")
    cfg = cfg or PartitionConfig()
    rules = rules or default_rules(cfg.delta_r)
    if rng is None:
        rng = random.Random(derive_seed(cfg.rng_seed, "cut"))
    cut, _, _ = _cut_with_distances(g, s, t, rules, cfg, rng)
    return cut


def sph_partition(g: Graph, s: int, t: int, cfg: PartitionConfig | None = None,
                  rules: RuleSet | None = None) -> list[TaskTriple]:
    """Recursively cut until every side fits the radius cap (and the
    optional size caps); returns leaf tasks in chain order, source side
    first, so consecutive leaves share an endpoint.

    Guards force a leaf when recursion stops making progress: terminals
    within two hops, an anchor equal to a terminal, a non-shrinking
    terminal distance, or the depth cap.
    """
    s = _check_node(g, s, "s")
    t = _check_node(g, t, "t")
    if s == t:
        raise ValueError("terminals must differ")
    cfg = cfg or PartitionConfig()
    rules = rules or default_rules(cfg.delta_r)
    tasks: list[TaskTriple] = []

    def view_of(cur: Graph, to_root: np.ndarray | None) -> SubgraphView:
        if to_root is None:
            return SubgraphView.identity(cur)
        return SubgraphView(cur, g, to_root)

    def size_ok(sub: Graph) -> bool:
        if cfg.v_max is not None and sub.node_count > cfg.v_max:
            return False
        if cfg.e_max is not None and sub.edge_count > cfg.e_max:
            return False
        return True

    def emit(cur: Graph, to_root, u: int, w: int, depth: int,
             radius: int | None, forced: bool) -> None:
        view = view_of(cur, to_root)
        entry = int(view.to_parent[u]) if to_root is not None else u
        exit_ = int(view.to_parent[w]) if to_root is not None else w
        tasks.append(TaskTriple(subgraph=view, entry=entry, exit=exit_,
                                depth=depth, radius=radius, forced=forced))

    def recurse(cur: Graph, to_root, u: int, w: int, depth: int, trail: str,
                built_radius: int | None, parent_hops: int | None) -> None:
        d = hop_distance(cur, u, w)
        if (cfg.l_max is not None and depth >= cfg.l_max) or d <= 2 \
                or (parent_hops is not None and d >= parent_hops):
            emit(cur, to_root, u, w, depth, built_radius, forced=True)
            return
        rng = random.Random(derive_seed(cfg.rng_seed, "anchor", trail))
        cut, ds, dt = _cut_with_distances(cur, u, w, rules, cfg, rng)
        a = cut.anchor
        if a == u or a == w:
            emit(cur, to_root, u, w, depth, built_radius, forced=True)
            return
        # source side: sphere around u holding (u, a); target side: sphere
        # around w holding (a, w)
        for side, entry, exit_, dist, radius in (
            ("s", u, a, ds, cut.radii.rs),
            ("t", a, w, dt, cut.radii.rt),
        ):
            members = np.flatnonzero((dist >= 0) & (dist <= radius))
            side_view = induced_subgraph(cur, members)
            if to_root is None:
                side_root = side_view.to_parent
            else:
                side_root = to_root[side_view.to_parent]
            lo_entry = side_view.local_of(entry)
            lo_exit = side_view.local_of(exit_)
            if radius <= cfg.r_max and size_ok(side_view.graph):
                emit(side_view.graph, side_root, lo_entry, lo_exit, depth,
                     radius, forced=False)
            else:
                recurse(side_view.graph, side_root, lo_entry, lo_exit,
                        depth + 1, trail + side, radius, d)

    recurse(g, None, s, t, 0, "r", None, None)
    return tasks
