# cython: language_level=3
"""Compiled CSR graph kernels.

Semantics are pinned by the pure-Python twin in _pykern; the two backends
must agree bit-for-bit (FIFO discovery order, ascending-neighbor scans,
heap ties broken by smaller node id).
"""

import numpy as np


def bfs_hops(indptr, indices, int n, int source, int cap):
    dist = np.full(n, -1, dtype=np.int32)
    parent = np.full(n, -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    cdef const long long[::1] ip = indptr
    cdef const int[::1] nbr = indices
    cdef int[::1] d = dist
    cdef int[::1] par = parent
    cdef int[::1] q = queue
    cdef Py_ssize_t head = 0, tail = 0
    cdef long long j
    cdef int u, v, du
    d[source] = 0
    q[tail] = source
    tail += 1
    with nogil:
        while head < tail:
            u = q[head]
            head += 1
            du = d[u]
            if cap >= 0 and du >= cap:
                continue
            for j in range(ip[u], ip[u + 1]):
                v = nbr[j]
                if d[v] < 0:
                    d[v] = du + 1
                    par[v] = u
                    q[tail] = v
                    tail += 1
    return dist, parent


def bfs_multi(indptr, indices, int n, seeds, int cap):
    dist = np.full(n, -1, dtype=np.int32)
    owner = np.full(n, -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    seeds_arr = np.ascontiguousarray(seeds, dtype=np.int32)
    cdef const long long[::1] ip = indptr
    cdef const int[::1] nbr = indices
    cdef int[::1] d = dist
    cdef int[::1] own = owner
    cdef int[::1] q = queue
    cdef int[::1] sd = seeds_arr
    cdef Py_ssize_t head = 0, tail = 0, si
    cdef long long j
    cdef int u, v, du, ou
    for si in range(sd.shape[0]):
        u = sd[si]
        if d[u] < 0:
            d[u] = 0
            own[u] = <int> si
            q[tail] = u
            tail += 1
    with nogil:
        while head < tail:
            u = q[head]
            head += 1
            du = d[u]
            ou = own[u]
            if cap >= 0 and du >= cap:
                continue
            for j in range(ip[u], ip[u + 1]):
                v = nbr[j]
                if d[v] < 0:
                    d[v] = du + 1
                    own[v] = ou
                    q[tail] = v
                    tail += 1
    return dist, owner


def components(indptr, indices, int n):
    labels = np.full(n, -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    cdef const long long[::1] ip = indptr
    cdef const int[::1] nbr = indices
    cdef int[::1] lab = labels
    cdef int[::1] q = queue
    cdef Py_ssize_t head, tail
    cdef long long j
    cdef int u, v, v0, c = 0
    with nogil:
        for v0 in range(n):
            if lab[v0] >= 0:
                continue
            lab[v0] = c
            q[0] = v0
            head = 0
            tail = 1
            while head < tail:
                u = q[head]
                head += 1
                for j in range(ip[u], ip[u + 1]):
                    v = nbr[j]
                    if lab[v] < 0:
                        lab[v] = c
                        q[tail] = v
                        tail += 1
            c += 1
    return labels, c


def hop_distance_bidir(indptr, indices, int n, int s, int t):
    if s == t:
        return 0
    dist_s = np.full(n, -1, dtype=np.int32)
    dist_t = np.full(n, -1, dtype=np.int32)
    fs = np.empty(n, dtype=np.int32)
    ft = np.empty(n, dtype=np.int32)
    fn = np.empty(n, dtype=np.int32)
    cdef const long long[::1] ip = indptr
    cdef const int[::1] nbr = indices
    cdef int[::1] ds = dist_s
    cdef int[::1] dt = dist_t
    cdef int[::1] cfs = fs
    cdef int[::1] cft = ft
    cdef int[::1] cfn = fn
    cdef Py_ssize_t nfs = 1, nft = 1, nn, i
    cdef long long j
    cdef int u, v, dv, level, best, cand, side_s
    cdef int level_s = 0, level_t = 0
    cdef int result = -1
    ds[s] = 0
    dt[t] = 0
    cfs[0] = s
    cft[0] = t
    with nogil:
        while nfs > 0 and nft > 0:
            side_s = 1 if nfs <= nft else 0
            best = -1
            nn = 0
            if side_s:
                level_s += 1
                level = level_s
                for i in range(nfs):
                    u = cfs[i]
                    for j in range(ip[u], ip[u + 1]):
                        v = nbr[j]
                        if ds[v] < 0:
                            ds[v] = level
                            cfn[nn] = v
                            nn += 1
                            dv = dt[v]
                            if dv >= 0:
                                cand = level + dv
                                if best < 0 or cand < best:
                                    best = cand
                if best >= 0:
                    result = best
                    break
                for i in range(nn):
                    cfs[i] = cfn[i]
                nfs = nn
            else:
                level_t += 1
                level = level_t
                for i in range(nft):
                    u = cft[i]
                    for j in range(ip[u], ip[u + 1]):
                        v = nbr[j]
                        if dt[v] < 0:
                            dt[v] = level
                            cfn[nn] = v
                            nn += 1
                            dv = ds[v]
                            if dv >= 0:
                                cand = level + dv
                                if best < 0 or cand < best:
                                    best = cand
                if best >= 0:
                    result = best
                    break
                for i in range(nn):
                    cft[i] = cfn[i]
                nft = nn
    return result


cdef inline bint _less(double d1, int v1, double d2, int v2) nogil:
    return d1 < d2 or (d1 == d2 and v1 < v2)


def dijkstra(indptr, indices, weights, int n, int source, int target):
    dist = np.full(n, np.inf, dtype=np.float64)
    parent = np.full(n, -1, dtype=np.int32)
    cdef Py_ssize_t cap = indices.shape[0] + 2
    heap_d = np.empty(cap, dtype=np.float64)
    heap_v = np.empty(cap, dtype=np.int32)
    cdef const long long[::1] ip = indptr
    cdef const int[::1] nbr = indices
    cdef const double[::1] w = weights
    cdef double[::1] d = dist
    cdef int[::1] par = parent
    cdef double[::1] hd = heap_d
    cdef int[::1] hv = heap_v
    cdef Py_ssize_t hn = 0, i, child, up
    cdef long long j
    cdef int u, v
    cdef double du, nd, tmpd
    cdef int tmpv
    d[source] = 0.0
    hd[0] = 0.0
    hv[0] = source
    hn = 1
    with nogil:
        while hn > 0:
            du = hd[0]
            u = hv[0]
            hn -= 1
            if hn > 0:
                hd[0] = hd[hn]
                hv[0] = hv[hn]
                i = 0
                while True:
                    child = 2 * i + 1
                    if child >= hn:
                        break
                    if child + 1 < hn and _less(hd[child + 1], hv[child + 1], hd[child], hv[child]):
                        child += 1
                    if _less(hd[child], hv[child], hd[i], hv[i]):
                        tmpd = hd[i]; hd[i] = hd[child]; hd[child] = tmpd
                        tmpv = hv[i]; hv[i] = hv[child]; hv[child] = tmpv
                        i = child
                    else:
                        break
            if du > d[u]:
                continue
            if u == target:
                break
            for j in range(ip[u], ip[u + 1]):
                v = nbr[j]
                nd = du + w[j]
                if nd < d[v]:
                    d[v] = nd
                    par[v] = u
                    i = hn
                    hd[i] = nd
                    hv[i] = v
                    hn += 1
                    while i > 0:
                        up = (i - 1) >> 1
                        if _less(hd[i], hv[i], hd[up], hv[up]):
                            tmpd = hd[i]; hd[i] = hd[up]; hd[up] = tmpd
                            tmpv = hv[i]; hv[i] = hv[up]; hv[up] = tmpv
                            i = up
                        else:
                            break
    return dist, parent
