"""Pure-Python implementations of the hot graph kernels.

Same API as the compiled ``_ckernel``: a graph is handed around as a dense
transition table with ``width = 2*rank`` columns, row ``v`` holding the
endpoint of the arc with code ``c`` leaving ``v`` (``-1`` if absent).  Arc
codes use the same encoding as word letters, so tracing a word is table
lookup per letter.
"""


def make_handle(table):
    return [list(row) for row in table]


def fold_arcs(n, arcs, width):
    """Fold the arc list to a deterministic table via union-find.

    ``arcs`` holds one entry (src, code, dst) per positive edge; mirror arcs
    are added internally.  Returns ``(table, vmap)`` where ``vmap`` sends an
    input vertex to its folded row index.
    """
    parent = list(range(n))
    size = [1] * n
    out = [[-1] * width for _ in range(n)]

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = []

    def set_arc(u, code, v):
        row = out[u]
        w = row[code]
        if w < 0:
            row[code] = v
        else:
            w = find(w)
            v = find(v)
            if w != v:
                pending.append((w, v))

    for src, code, dst in arcs:
        s = find(src)
        d = find(dst)
        set_arc(s, code, d)
        set_arc(find(d), code ^ 1, find(s))
        while pending:
            a, b = pending.pop()
            a = find(a)
            b = find(b)
            if a == b:
                continue
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
            row_b = out[b]
            for c in range(width):
                t = row_b[c]
                if t >= 0:
                    set_arc(a, c, t)

    roots = [v for v in range(n) if find(v) == v]
    rid = {r: i for i, r in enumerate(roots)}
    table = []
    for r in roots:
        row = out[r]
        table.append([rid[find(t)] if t >= 0 else -1 for t in row])
    vmap = [rid[find(v)] for v in range(n)]
    return table, vmap


def trace(handle, start, letters):
    """Follow ``letters`` from ``start``; return the end vertex or -1."""
    cur = start
    for c in letters:
        cur = handle[cur][c]
        if cur < 0:
            return -1
    return cur


def scan_loops(handle, core_handle, vertices, first_word, other_words):
    """Return the vertices at which every word reads a loop.

    ``first_word`` is traced through ``core_handle`` (it dies on leaving the
    core, which is the early exit); the remaining words are traced through
    the full table.
    """
    hits = []
    for v in vertices:
        cur = v
        for c in first_word:
            cur = core_handle[cur][c]
            if cur < 0:
                break
        if cur != v:
            continue
        ok = True
        for word in other_words:
            cur = v
            for c in word:
                cur = handle[cur][c]
                if cur < 0:
                    break
            if cur != v:
                ok = False
                break
        if ok:
            hits.append(v)
    return hits
