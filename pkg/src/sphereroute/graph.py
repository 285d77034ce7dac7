"""Graph storage and ingestion.

Graphs are immutable, undirected, positively weighted, and stored in
compressed sparse row form with dense 0-based node ids. DIMACS shortest
path ``.gr`` files (optionally gzip-compressed) are the on-disk format;
a small binary cache keyed by the source file's content hash makes
reloading large road graphs cheap.
"""
from __future__ import annotations

import gzip
import io
import os
import struct
from array import array
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np

from .errors import GraphParseError, InvariantError
from .util import short_hash
from . import kernels

_CACHE_MAGIC = b"SPRG"
_CACHE_VERSION = 2


class Graph:
    """Immutable undirected weighted graph in CSR form.

    Invariants enforced at construction: symmetry (every edge stored in
    both directions), strictly positive finite weights, no self-loops, at
    most one edge per unordered pair, and per-row neighbor lists sorted
    by id.
    """

    __slots__ = ("node_count", "indptr", "indices", "weights", "_components")

    def __init__(self, node_count: int, indptr, indices, weights):
        if node_count < 1:
            raise ValueError("graph needs at least one node")
        self.node_count = int(node_count)
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int32)
        self.weights = np.ascontiguousarray(weights, dtype=np.float64)
        for arr in (self.indptr, self.indices, self.weights):
            arr.setflags(write=False)
        self._components = None

    # -- construction ----------------------------------------------------

    @classmethod
    def from_arrays(cls, node_count: int, u, v, w) -> "Graph":
        """Build from parallel arrays of undirected edges (one entry per
        unordered pair). Raises on duplicate pairs, self-loops, bad ids,
        or non-positive weights."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        w = np.asarray(w, dtype=np.float64)
        if not (u.shape == v.shape == w.shape):
            raise ValueError("edge arrays must have matching length")
        if u.size:
            if u.min() < 0 or v.min() < 0 or max(u.max(), v.max()) >= node_count:
                raise ValueError("node id out of range")
            if np.any(u == v):
                raise ValueError("self-loops are not allowed")
            if np.any(~np.isfinite(w)) or np.any(w <= 0):
                raise ValueError("edge weights must be positive and finite")
        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        order = np.lexsort((hi, lo))
        lo, hi, w = lo[order], hi[order], w[order]
        if lo.size > 1:
            dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
            if np.any(dup):
                k = int(np.flatnonzero(dup)[0])
                raise ValueError(f"duplicate edge {int(lo[k])}-{int(hi[k])}")
        return cls._from_pairs(node_count, lo, hi, w)

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int, float]]) -> "Graph":
        rows = list(edges)
        if rows:
            u, v, w = zip(*rows)
        else:
            u, v, w = (), (), ()
        return cls.from_arrays(node_count, np.array(u, dtype=np.int64),
                               np.array(v, dtype=np.int64), np.array(w, dtype=np.float64))

    @classmethod
    def _from_pairs(cls, node_count: int, lo, hi, w) -> "Graph":
        # lo < hi, unique pairs, already validated
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        ww = np.concatenate([w, w])
        order = np.lexsort((dst, src))
        src, dst, ww = src[order], dst[order], ww[order]
        counts = np.bincount(src, minlength=node_count)
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(node_count, indptr, dst.astype(np.int32), ww)

    @classmethod
    def _from_csr(cls, node_count: int, indptr, indices, weights) -> "Graph":
        # trusted caller: arrays already form a valid symmetric CSR
        return cls(node_count, indptr, indices, weights)

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self.indices.size // 2

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    def neighbors(self, u: int):
        lo, hi = int(self.indptr[u]), int(self.indptr[u + 1])
        return self.indices[lo:hi], self.weights[lo:hi]

    def edge_weight(self, u: int, v: int) -> float:
        lo, hi = int(self.indptr[u]), int(self.indptr[u + 1])
        j = lo + int(np.searchsorted(self.indices[lo:hi], v))
        if j < hi and self.indices[j] == v:
            return float(self.weights[j])
        raise KeyError(f"no edge {u}-{v}")

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.edge_weight(u, v)
            return True
        except KeyError:
            return False

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Iterate undirected edges once, with u < v."""
        for u in range(self.node_count):
            for j in range(int(self.indptr[u]), int(self.indptr[u + 1])):
                v = int(self.indices[j])
                if u < v:
                    yield u, v, float(self.weights[j])

    def component_labels(self) -> np.ndarray:
        if self._components is None:
            labels, _ = kernels.components(self.indptr, self.indices, self.node_count)
            labels.setflags(write=False)
            self._components = labels
        return self._components

    def content_hash(self) -> str:
        h = short_hash(
            struct.pack("<q", self.node_count)
            + self.indptr.tobytes()
            + self.indices.tobytes()
            + self.weights.tobytes()
        )
        return h

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.weights, other.weights)
        )

    def __hash__(self):
        return hash((self.node_count, self.content_hash()))

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


class SubgraphView:
    """An induced subgraph plus the id mapping back to its parent graph.

    ``graph`` uses dense local ids; ``to_parent[local] == parent`` and the
    partial inverse is served by :meth:`local_of` via binary search
    (``to_parent`` is kept sorted ascending).
    """

    __slots__ = ("graph", "parent", "to_parent")

    def __init__(self, graph: Graph, parent: Graph, to_parent):
        self.graph = graph
        self.parent = parent
        self.to_parent = np.ascontiguousarray(to_parent, dtype=np.int32)
        self.to_parent.setflags(write=False)

    def local_of(self, parent_id: int) -> int:
        j = int(np.searchsorted(self.to_parent, parent_id))
        if j < self.to_parent.size and self.to_parent[j] == parent_id:
            return j
        raise KeyError(f"node {parent_id} not in subgraph")

    def __contains__(self, parent_id: int) -> bool:
        try:
            self.local_of(parent_id)
            return True
        except KeyError:
            return False

    def parent_ids(self, local_ids) -> np.ndarray:
        return self.to_parent[np.asarray(local_ids, dtype=np.int64)]

    @classmethod
    def identity(cls, g: Graph) -> "SubgraphView":
        return cls(g, g, np.arange(g.node_count, dtype=np.int32))

    @classmethod
    def compose(cls, outer: "SubgraphView", inner: "SubgraphView") -> "SubgraphView":
        """View of ``inner.graph`` inside ``outer``'s parent.

        ``inner`` must be a view over ``outer.graph``.
        """
        if inner.parent is not outer.graph:
            raise InvariantError("views do not nest")
        return cls(inner.graph, outer.parent, outer.to_parent[inner.to_parent])

    def __repr__(self) -> str:
        return f"SubgraphView(nodes={self.graph.node_count}, parent_nodes={self.parent.node_count})"


def induced_subgraph(g: Graph, nodes) -> SubgraphView:
    """Subgraph on `nodes` with exactly the parent edges between them."""
    nodes = np.unique(np.asarray(nodes, dtype=np.int64))
    if nodes.size == 0:
        raise ValueError("empty node set")
    if nodes[0] < 0 or nodes[-1] >= g.node_count:
        raise ValueError("node id out of range")
    local_of = np.full(g.node_count, -1, dtype=np.int32)
    local_of[nodes] = np.arange(nodes.size, dtype=np.int32)
    starts = g.indptr[nodes]
    lens = g.indptr[nodes + 1] - starts
    total = int(lens.sum())
    # gather the selected CSR rows back to back
    offsets = np.repeat(np.cumsum(lens) - lens, lens)
    idx = np.repeat(starts, lens) + (np.arange(total, dtype=np.int64) - offsets)
    nbr = g.indices[idx]
    keep = local_of[nbr] >= 0
    rows = np.repeat(np.arange(nodes.size, dtype=np.int64), lens)[keep]
    cols = local_of[nbr[keep]]
    ws = g.weights[idx][keep]
    indptr = np.zeros(nodes.size + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=nodes.size), out=indptr[1:])
    sub = Graph._from_csr(nodes.size, indptr, cols.astype(np.int32), ws)
    return SubgraphView(sub, g, nodes.astype(np.int32))


def is_connected(g: Graph) -> bool:
    dist, _ = kernels.bfs_hops(g.indptr, g.indices, g.node_count, 0, -1)
    return bool(np.all(dist >= 0))


def extract_largest_component(g: Graph) -> SubgraphView:
    labels = g.component_labels()
    sizes = np.bincount(labels)
    big = int(np.argmax(sizes))
    return induced_subgraph(g, np.flatnonzero(labels == big))


def walk_cost(g: Graph, nodes) -> float:
    """Total weight of a node walk; KeyError if a step is not an edge."""
    total = 0.0
    for a, b in zip(nodes[:-1], nodes[1:]):
        total += g.edge_weight(int(a), int(b))
    return total


# -- DIMACS ``.gr`` ingestion ---------------------------------------------


@dataclass
class DimacsReadResult:
    graph: Graph
    conflict_arcs: int  # unordered pairs that appeared with differing weights


def _iter_lines(source) -> Iterator[str]:
    if isinstance(source, bytes):
        yield from io.StringIO(source.decode("ascii", errors="replace"))
    elif isinstance(source, str):
        yield from io.StringIO(source)
    else:
        for raw in source:
            if isinstance(raw, bytes):
                yield raw.decode("ascii", errors="replace")
            else:
                yield raw


def read_dimacs(source) -> DimacsReadResult:
    """Parse DIMACS shortest-path ``.gr`` content into an undirected Graph.

    Each directed arc pair collapses to one undirected edge; a pair listed
    with conflicting weights keeps the minimum and bumps ``conflict_arcs``.
    Node ids are converted from 1-based to dense 0-based.
    """
    n = -1
    us = array("q")
    vs = array("q")
    ws = array("d")
    for lineno, line in enumerate(_iter_lines(source), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n >= 0:
                raise GraphParseError(f"line {lineno}: duplicate problem line")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "sp":
                raise GraphParseError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(parts[2])
                declared_m = int(parts[3])
            except ValueError:
                raise GraphParseError(f"line {lineno}: malformed problem line {line!r}") from None
            if n < 1 or declared_m < 0:
                raise GraphParseError(f"line {lineno}: bad sizes in problem line")
            continue
        if line.startswith("a"):
            if n < 0:
                raise GraphParseError(f"line {lineno}: arc before problem line")
            parts = line.split()
            if len(parts) != 4:
                raise GraphParseError(f"line {lineno}: malformed arc line {line!r}")
            try:
                u = int(parts[1])
                v = int(parts[2])
                w = float(parts[3])
            except ValueError:
                raise GraphParseError(f"line {lineno}: malformed arc line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"line {lineno}: node id out of range")
            if u == v:
                raise GraphParseError(f"line {lineno}: self-loop on node {u}")
            if not (w > 0) or w != w or w == float("inf"):
                raise GraphParseError(f"line {lineno}: non-positive weight")
            us.append(u - 1)
            vs.append(v - 1)
            ws.append(w)
            continue
        raise GraphParseError(f"line {lineno}: unrecognized line {line!r}")
    if n < 0:
        raise GraphParseError("missing problem line")
    u = np.frombuffer(us, dtype=np.int64)
    v = np.frombuffer(vs, dtype=np.int64)
    w = np.frombuffer(ws, dtype=np.float64)
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    order = np.lexsort((hi, lo))
    lo, hi, w = lo[order], hi[order], w[order]
    conflicts = 0
    if lo.size:
        new_pair = np.ones(lo.size, dtype=bool)
        new_pair[1:] = (lo[1:] != lo[:-1]) | (hi[1:] != hi[:-1])
        starts = np.flatnonzero(new_pair)
        wmin = np.minimum.reduceat(w, starts)
        wmax = np.maximum.reduceat(w, starts)
        conflicts = int(np.count_nonzero(wmax > wmin))
        lo, hi, w = lo[starts], hi[starts], wmin
    graph = Graph._from_pairs(n, lo, hi, w)
    return DimacsReadResult(graph=graph, conflict_arcs=conflicts)


def parse_dimacs_gr(source) -> Graph:
    return read_dimacs(source).graph


def write_dimacs(g: Graph, out: str | os.PathLike | IO[str], comments: Iterable[str] = ()) -> None:
    """Write in DIMACS ``.gr`` form, listing both arc directions as road
    files do. Integer weights are written exactly; others via repr()."""

    def fmt(w: float) -> str:
        return str(int(w)) if w.is_integer() else repr(w)

    def emit(f: IO[str]) -> None:
        for c in comments:
            f.write(f"c {c}\n")
        f.write(f"p sp {g.node_count} {g.indices.size}\n")
        for u in range(g.node_count):
            lo, hi = int(g.indptr[u]), int(g.indptr[u + 1])
            for j in range(lo, hi):
                f.write(f"a {u + 1} {int(g.indices[j]) + 1} {fmt(float(g.weights[j]))}\n")

    if hasattr(out, "write"):
        emit(out)
    else:
        with open(out, "w", encoding="ascii") as f:
            emit(f)


# -- binary cache ----------------------------------------------------------


def _cache_path(path: str) -> str:
    return path + ".sprc"


def save_cache(path: str, g: Graph, source_hash: str, conflict_arcs: int) -> None:
    tmp = path + ".tmp"
    with open(tmp, "wb") as f:
        f.write(_CACHE_MAGIC)
        f.write(struct.pack("<I", _CACHE_VERSION))
        hb = source_hash.encode("ascii")
        f.write(struct.pack("<I", len(hb)))
        f.write(hb)
        f.write(struct.pack("<qqI", g.node_count, g.indices.size, conflict_arcs))
        f.write(g.indptr.tobytes())
        f.write(g.indices.tobytes())
        f.write(g.weights.tobytes())
    os.replace(tmp, path)


def load_cache(path: str, expect_hash: str) -> DimacsReadResult | None:
    try:
        with open(path, "rb") as f:
            if f.read(4) != _CACHE_MAGIC:
                return None
            (version,) = struct.unpack("<I", f.read(4))
            if version != _CACHE_VERSION:
                return None
            (hlen,) = struct.unpack("<I", f.read(4))
            if f.read(hlen).decode("ascii") != expect_hash:
                return None
            n, m2, conflicts = struct.unpack("<qqI", f.read(20))
            indptr = np.frombuffer(f.read(8 * (n + 1)), dtype=np.int64)
            indices = np.frombuffer(f.read(4 * m2), dtype=np.int32)
            weights = np.frombuffer(f.read(8 * m2), dtype=np.float64)
            if indptr.size != n + 1 or indices.size != m2 or weights.size != m2:
                return None
            return DimacsReadResult(Graph._from_csr(n, indptr, indices, weights), conflicts)
    except (OSError, struct.error):
        return None


@dataclass
class LoadResult:
    graph: Graph
    source_hash: str
    conflict_arcs: int
    to_original: np.ndarray | None = None  # set when a component was extracted


def load_graph(path: str | os.PathLike, use_cache: bool = False,
               largest_component: bool = False) -> LoadResult:
    """Load a ``.gr`` or ``.gr.gz`` file, optionally via the binary cache
    and optionally restricted to the largest connected component."""
    path = os.fspath(path)
    with open(path, "rb") as f:
        raw = f.read()
    source_hash = short_hash(raw, length=16)
    result = None
    if use_cache:
        result = load_cache(_cache_path(path), source_hash)
    if result is None:
        data = gzip.decompress(raw) if path.endswith(".gz") else raw
        result = read_dimacs(data)
        if use_cache:
            save_cache(_cache_path(path), result.graph, source_hash, result.conflict_arcs)
    graph = result.graph
    to_original = None
    if largest_component and not is_connected(graph):
        view = extract_largest_component(graph)
        graph = view.graph
        to_original = view.to_parent
    return LoadResult(graph, source_hash, result.conflict_arcs, to_original)
