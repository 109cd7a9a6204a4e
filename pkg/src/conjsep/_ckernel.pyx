# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled graph kernels; _pykernel is the reference implementation."""

import numpy as np


def make_handle(table):
    n = len(table)
    if n == 0:
        return np.empty((0, 0), dtype=np.int32)
    return np.ascontiguousarray(np.asarray(table, dtype=np.int32).reshape(n, -1))


cdef int _find(int[::1] parent, int x):
    cdef int root = x
    cdef int nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def fold_arcs(int n, arcs, int width):
    """Union-find folding; see _pykernel.fold_arcs for the contract."""
    if n == 0:
        return [], []
    parent_arr = np.arange(n, dtype=np.int32)
    size_arr = np.ones(n, dtype=np.int32)
    out_arr = np.full((n, width), -1, dtype=np.int32)
    cdef int[::1] parent = parent_arr
    cdef int[::1] size = size_arr
    cdef int[:, ::1] out = out_arr
    cdef list pending = []
    cdef int s, d, c, a, b, t, c2, w

    for arc in arcs:
        s = arc[0]
        c = arc[1]
        d = arc[2]
        s = _find(parent, s)
        d = _find(parent, d)
        w = out[s, c]
        if w < 0:
            out[s, c] = d
        else:
            w = _find(parent, w)
            if w != d:
                pending.append((w, d))
        w = out[d, c ^ 1]
        if w < 0:
            out[d, c ^ 1] = s
        else:
            w = _find(parent, w)
            if w != s:
                pending.append((w, s))
        while pending:
            a, b = pending.pop()
            a = _find(parent, a)
            b = _find(parent, b)
            if a == b:
                continue
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
            for c2 in range(width):
                t = out[b, c2]
                if t >= 0:
                    w = out[a, c2]
                    if w < 0:
                        out[a, c2] = t
                    else:
                        w = _find(parent, w)
                        t = _find(parent, t)
                        if w != t:
                            pending.append((w, t))

    cdef list table = []
    cdef list vmap = []
    cdef dict rid = {}
    cdef int v, r
    for v in range(n):
        if _find(parent, v) == v:
            rid[v] = len(rid)
    for v in range(n):
        if rid.get(v) is None:
            continue
        row = []
        for c2 in range(width):
            t = out[v, c2]
            row.append(rid[_find(parent, t)] if t >= 0 else -1)
        table.append(row)
    for v in range(n):
        vmap.append(rid[_find(parent, v)])
    return table, vmap


def trace(int[:, ::1] handle, int start, letters):
    """Follow ``letters`` from ``start``; return the end vertex or -1."""
    cdef int cur = start
    cdef int code
    for code in letters:
        cur = handle[cur, code]
        if cur < 0:
            return -1
    return cur


def scan_loops(int[:, ::1] handle, int[:, ::1] core_handle, vertices, first_word, other_words):
    """Vertices where the first word loops inside the core and the others in the full graph."""
    first_arr = np.array(first_word, dtype=np.int32)
    verts_arr = np.array(vertices, dtype=np.int32)
    offs_list = [0]
    flat_list = []
    for w in other_words:
        flat_list.extend(w)
        offs_list.append(len(flat_list))
    offs_arr = np.array(offs_list, dtype=np.int32)
    flat_arr = np.array(flat_list, dtype=np.int32)

    cdef int[::1] first = first_arr
    cdef int[::1] verts = verts_arr
    cdef int[::1] offs = offs_arr
    cdef int[::1] flat = flat_arr
    cdef int nfirst = first.shape[0]
    cdef int nwords = offs.shape[0] - 1
    cdef int i, j, p, q, v, cur, ok
    cdef list hits = []

    for i in range(verts.shape[0]):
        v = verts[i]
        cur = v
        for j in range(nfirst):
            cur = core_handle[cur, first[j]]
            if cur < 0:
                break
        if cur != v:
            continue
        ok = 1
        for p in range(nwords):
            cur = v
            for q in range(offs[p], offs[p + 1]):
                cur = handle[cur, flat[q]]
                if cur < 0:
                    break
            if cur != v:
                ok = 0
                break
        if ok:
            hits.append(v)
    return hits
