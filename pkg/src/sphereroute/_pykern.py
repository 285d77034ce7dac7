"""Pure-Python CSR graph kernels (fallback backend).

These pin the reference semantics that the compiled backend must match
bit-for-bit:

- BFS discovery is FIFO with neighbors scanned in ascending id order
  (CSR rows are sorted), so every node's parent is its first discoverer.
- Multi-source BFS seeds the queue in the given seed order; ties between
  waves are resolved by whichever wave reaches a node first in FIFO order.
- Dijkstra uses a binary heap with lazy deletion and breaks priority ties
  by the smaller node id; relaxations update parents only on strict
  improvement.

All functions take raw CSR arrays (indptr int64, indices int32,
weights float64) rather than Graph objects so both backends stay dumb.
"""
from __future__ import annotations

import heapq

import numpy as np


def bfs_hops(indptr, indices, n, source, cap):
    """Hop distances from `source`, stopping at `cap` hops (cap < 0: none).

    Returns (dist int32, parent int32); -1 marks unreached / no parent.
    """
    dist = np.full(n, -1, dtype=np.int32)
    parent = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = int(dist[u])
        if cap >= 0 and du >= cap:
            continue
        for j in range(int(indptr[u]), int(indptr[u + 1])):
            v = int(indices[j])
            if dist[v] < 0:
                dist[v] = du + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def bfs_multi(indptr, indices, n, seeds, cap):
    """Multi-source BFS; owner[v] is the index (into `seeds`) of the wave
    that reached v first. Duplicate seeds keep the earliest index."""
    dist = np.full(n, -1, dtype=np.int32)
    owner = np.full(n, -1, dtype=np.int32)
    queue = []
    for si, s in enumerate(seeds):
        s = int(s)
        if dist[s] < 0:
            dist[s] = 0
            owner[s] = si
            queue.append(s)
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = int(dist[u])
        ou = int(owner[u])
        if cap >= 0 and du >= cap:
            continue
        for j in range(int(indptr[u]), int(indptr[u + 1])):
            v = int(indices[j])
            if dist[v] < 0:
                dist[v] = du + 1
                owner[v] = ou
                queue.append(v)
    return dist, owner


def components(indptr, indices, n):
    """Connected component labels (int32) and the component count."""
    labels = np.full(n, -1, dtype=np.int32)
    queue = [0] * n
    c = 0
    for v0 in range(n):
        if labels[v0] >= 0:
            continue
        labels[v0] = c
        queue[0] = v0
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            for j in range(int(indptr[u]), int(indptr[u + 1])):
                v = int(indices[j])
                if labels[v] < 0:
                    labels[v] = c
                    queue[tail] = v
                    tail += 1
        c += 1
    return labels, c


def hop_distance_bidir(indptr, indices, n, s, t):
    """Exact hop distance via alternating level-synchronous bidirectional
    BFS; expands the smaller frontier each round. Returns -1 if t is
    unreachable from s."""
    if s == t:
        return 0
    dist_s = np.full(n, -1, dtype=np.int32)
    dist_t = np.full(n, -1, dtype=np.int32)
    dist_s[s] = 0
    dist_t[t] = 0
    frontier_s = [s]
    frontier_t = [t]
    level_s = 0
    level_t = 0
    while frontier_s and frontier_t:
        if len(frontier_s) <= len(frontier_t):
            frontier, dist, other, level = frontier_s, dist_s, dist_t, level_s + 1
            level_s = level
            side_s = True
        else:
            frontier, dist, other, level = frontier_t, dist_t, dist_s, level_t + 1
            level_t = level
            side_s = False
        nxt = []
        best = -1
        for u in frontier:
            for j in range(int(indptr[u]), int(indptr[u + 1])):
                v = int(indices[j])
                if dist[v] < 0:
                    dist[v] = level
                    nxt.append(v)
                    dv = int(other[v])
                    if dv >= 0:
                        cand = level + dv
                        if best < 0 or cand < best:
                            best = cand
        if best >= 0:
            return best
        if side_s:
            frontier_s = nxt
        else:
            frontier_t = nxt
    return -1


def dijkstra(indptr, indices, weights, n, source, target):
    """Point-to-point Dijkstra; target < 0 settles the whole component.

    Returns (dist float64 with inf for unreached, parent int32).
    """
    dist = np.full(n, np.inf, dtype=np.float64)
    parent = np.full(n, -1, dtype=np.int32)
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        if u == target:
            break
        for j in range(int(indptr[u]), int(indptr[u + 1])):
            v = int(indices[j])
            nd = d + float(weights[j])
            if nd < dist[v]:
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, parent
