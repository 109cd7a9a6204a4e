"""Stallings graphs for finitely generated subgroups of free groups.

A subgroup graph is a folded, based, connected core graph whose reduced loop
labels at the base vertex are exactly the subgroup elements.  Graphs are
stored as dense transition tables (row per vertex, column per arc code) and
are normalized by BFS from the base in arc-code order, so equal tables mean
isomorphic based labeled graphs.
"""

from dataclasses import dataclass

from . import kernels
from .errors import InputError
from .perms import Homomorphism, identity as perm_identity, inv as perm_inv, is_closed, mul as perm_mul
from .words import Alphabet, Word


def _rank_of(alphabet):
    return alphabet.rank if isinstance(alphabet, Alphabet) else int(alphabet)


@dataclass(frozen=True)
class LabeledGraph:
    """Possibly unfolded edge-labeled digraph with a base vertex.

    Edge labels are generator indices; each edge is traversable both ways.
    """

    vertex_count: int
    edges: tuple
    base: int = 0

    def __post_init__(self):
        for src, label, dst in self.edges:
            if not (0 <= src < self.vertex_count and 0 <= dst < self.vertex_count):
                raise InputError(f"edge ({src}, {label}, {dst}) out of range")
            if label < 0:
                raise InputError(f"negative edge label {label}")
        if self.vertex_count > 0 and not 0 <= self.base < self.vertex_count:
            raise InputError("base vertex out of range")


def _width_for(edges):
    return 2 * (1 + max((label for _, label, _ in edges), default=-1))


def _graph_from_table(table, base):
    edges = []
    for v, row in enumerate(table):
        for code in range(0, len(row), 2):
            if row[code] >= 0:
                edges.append((v, code // 2, row[code]))
    return LabeledGraph(len(table), tuple(edges), base)


def fold(graph: LabeledGraph) -> LabeledGraph:
    """Fold a connected labeled graph to determinism and co-determinism.

    The based loop language is unchanged; runs in near-linear time in the
    edge count (union-find with a worklist of label clashes).
    """
    arcs = [(s, 2 * label, d) for s, label, d in graph.edges]
    table, vmap = kernels.fold_arcs(graph.vertex_count, arcs, _width_for(graph.edges))
    return _graph_from_table(table, vmap[graph.base] if graph.vertex_count else 0)


def based_core(graph: LabeledGraph) -> LabeledGraph:
    """Iteratively remove degree-1 vertices other than the base.

    Input must be folded and connected; the base loop language is unchanged.
    """
    width = _width_for(graph.edges)
    table = [[-1] * width for _ in range(graph.vertex_count)]
    for s, label, d in graph.edges:
        table[s][2 * label] = d
        table[d][2 * label + 1] = s
    table, base = _prune(table, keep=graph.base)
    return _graph_from_table(table, base)


def _prune(table, keep=None):
    """Strip degree<=1 vertices (never ``keep``); compact and return new table."""
    n = len(table)
    width = len(table[0]) if table else 0
    deg = [sum(1 for t in row if t >= 0) for row in table]
    alive = [True] * n
    stack = [v for v in range(n) if v != keep and deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        row = table[v]
        for code in range(width):
            u = row[code]
            if u >= 0:
                row[code] = -1
                if alive[u]:
                    table[u][code ^ 1] = -1
                    deg[u] -= 1
                    if u != keep and deg[u] <= 1:
                        stack.append(u)
    new_id = {}
    for v in range(n):
        if alive[v]:
            new_id[v] = len(new_id)
    out = []
    for v in range(n):
        if alive[v]:
            out.append([new_id[t] if t >= 0 else -1 for t in table[v]])
    if keep is not None and alive[keep]:
        return out, new_id[keep]
    return out, 0


def _canonicalize(table, base):
    """BFS-relabel from the base, exploring arcs in code order.

    Returns the table as a tuple of tuples plus, for each vertex, its BFS
    spanning-tree arc ``(parent, code)`` (``None`` for the base).
    """
    n = len(table)
    width = len(table[0]) if table else 0
    pos = {base: 0}
    order = [base]
    parent = [None]
    for v in order:
        row = table[v]
        for code in range(width):
            t = row[code]
            if t >= 0 and t not in pos:
                pos[t] = len(order)
                parent.append((pos[v], code))
                order.append(t)
    if len(order) != n:
        raise InputError("graph is not connected")
    new = tuple(
        tuple(pos[table[v][code]] if table[v][code] >= 0 else -1 for code in range(width))
        for v in order
    )
    return new, tuple(parent)


class SubgroupGraph:
    """Folded based core graph of a subgroup of the rank-``rank`` free group."""

    __slots__ = ("rank", "table", "parent", "_handle", "_basis_arcs")

    def __init__(self, rank, table, parent):
        self.rank = rank
        self.table = table
        self.parent = parent
        self._handle = kernels.make_handle(table)
        self._basis_arcs = None

    @classmethod
    def _finish(cls, rank, list_table, base):
        list_table, base = _prune(list_table, keep=base)
        table, parent = _canonicalize(list_table, base)
        return cls(rank, table, parent)

    @classmethod
    def from_table(cls, rank, table, base=0):
        """Wrap an explicit transition table (validated, then normalized)."""
        width = 2 * rank
        n = len(table)
        rows = []
        for v, row in enumerate(table):
            if len(row) != width:
                raise InputError(f"row {v} has width {len(row)}, expected {width}")
            for code in range(width):
                t = row[code]
                if t >= 0:
                    if t >= n:
                        raise InputError(f"vertex {t} out of range")
                    if table[t][code ^ 1] != v:
                        raise InputError(f"arc ({v}, {code}, {t}) has no mirror: table not folded")
            rows.append(list(row))
        return cls._finish(rank, rows, base)

    # -- queries ---------------------------------------------------------

    @property
    def vertex_count(self):
        return len(self.table)

    def edges(self):
        """Positive edges (src, label, dst) in canonical order."""
        for v, row in enumerate(self.table):
            for i in range(self.rank):
                if row[2 * i] >= 0:
                    yield (v, i, row[2 * i])

    @property
    def num_edges(self):
        return sum(1 for _ in self.edges())

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupGraph)
            and self.rank == other.rank
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.rank, self.table))

    def __repr__(self):
        return f"<SubgroupGraph rank={self.rank} vertices={self.vertex_count} edges={self.num_edges}>"

    def _check_word(self, word):
        if word.max_gen() >= self.rank:
            raise InputError(
                f"word uses generator index {word.max_gen()}, graph has rank {self.rank}"
            )
        return word

    def contains(self, word: Word) -> bool:
        """Membership: does the reduced word read a loop at the base?"""
        self._check_word(word)
        return kernels.trace(self._handle, 0, word.letters) == 0

    def trace_from(self, start, word):
        """End of the path reading ``word`` from ``start``; -1 if it dies."""
        return kernels.trace(self._handle, start, word.letters)

    def index(self):
        """Subgroup index: the vertex count if the graph is a complete cover, else None."""
        for row in self.table:
            for t in row:
                if t < 0:
                    return None
        return self.vertex_count

    def free_rank(self):
        """Rank of the subgroup as a free group (Euler characteristic)."""
        return self.num_edges - self.vertex_count + 1

    def path_word(self, v) -> Word:
        """Label of the spanning-tree path from the base to ``v``."""
        codes = []
        while v != 0:
            v, code = self.parent[v]
            codes.append(code)
        return Word(reversed(codes))

    def coset_reps(self):
        """Spanning-tree words, one per vertex; requires finite index."""
        if self.index() is None:
            raise InputError("infinite index")
        return [self.path_word(v) for v in range(self.vertex_count)]

    def _tree_arc(self, v, code, u):
        return self.parent[u] == (v, code) or self.parent[v] == (u, code ^ 1)

    def basis(self):
        """Free generating set from the spanning tree, one word per extra edge."""
        words = []
        for v, i, u in self.edges():
            if not self._tree_arc(v, 2 * i, u):
                words.append(self.path_word(v) * Word((2 * i,)) * self.path_word(u).inverse())
        return words

    def _basis_arc_index(self):
        if self._basis_arcs is None:
            arcs = {}
            for v, i, u in self.edges():
                if not self._tree_arc(v, 2 * i, u):
                    arcs[(v, 2 * i)] = len(arcs)
            self._basis_arcs = arcs
        return self._basis_arcs

    def rewrite_in_basis(self, word):
        """Express a member in the spanning-tree basis; None if not a member."""
        self._check_word(word)
        arcs = self._basis_arc_index()
        out = []
        cur = 0
        for code in word.letters:
            nxt = self.table[cur][code]
            if nxt < 0:
                return None
            if code & 1:
                idx = arcs.get((nxt, code ^ 1))
                if idx is not None:
                    out.append(2 * idx + 1)
            else:
                idx = arcs.get((cur, code))
                if idx is not None:
                    out.append(2 * idx)
            cur = nxt
        if cur != 0:
            return None
        return Word(out)

    def contains_subgroup(self, other):
        """True if every basis word of ``other`` is a member of this graph."""
        return all(self.contains(w) for w in other.basis())

    def to_json_dict(self):
        return {
            "vertices": self.vertex_count,
            "base": 0,
            "edges": [{"src": s, "dst": d, "label": i} for s, i, d in self.edges()],
        }

    @classmethod
    def from_json_dict(cls, rank, data):
        n = data["vertices"]
        table = [[-1] * (2 * rank) for _ in range(n)]
        for e in data["edges"]:
            s, d, i = e["src"], e["dst"], e["label"]
            table[s][2 * i] = d
            table[d][2 * i + 1] = s
        return cls.from_table(rank, table, data.get("base", 0))


def wedge_arcs(rank, generators):
    """Arc list of the wedge of generator loops at vertex 0 (before folding)."""
    arcs = []
    n = 1
    for w in generators:
        if w.max_gen() >= rank:
            raise InputError(f"generator {w!r} uses an index beyond rank {rank}")
        letters = w.letters
        prev = 0
        for pos, code in enumerate(letters):
            nxt = 0 if pos == len(letters) - 1 else n
            if nxt != 0:
                n += 1
            arcs.append((prev, code, nxt))
            prev = nxt
    return n, arcs


def build_subgroup_graph(alphabet, generators) -> SubgroupGraph:
    """Stallings graph of the subgroup generated by the given reduced words.

    Wedges one loop per generator at the base and folds; the vertex count of
    the result is at most 1 plus the total generator length.
    """
    rank = _rank_of(alphabet)
    n, arcs = wedge_arcs(rank, generators)
    table, vmap = kernels.fold_arcs(n, arcs, 2 * rank)
    return SubgroupGraph._finish(rank, table, vmap[0])


class CyclicCore:
    """The minimal deformation retract of a subgroup graph.

    Obtained by iteratively stripping degree<=1 vertices with no exception
    for the base; exactly the part of the graph that can carry a nontrivial
    cyclically reduced loop.
    """

    __slots__ = ("graph", "vertices", "core_table", "_member", "_handle")

    def __init__(self, graph: SubgroupGraph):
        table = graph.table
        n = len(table)
        width = 2 * graph.rank
        deg = [sum(1 for t in row if t >= 0) for row in table]
        alive = [True] * n
        stack = [v for v in range(n) if deg[v] <= 1]
        removed = [[False] * width for _ in range(n)]
        while stack:
            v = stack.pop()
            if not alive[v]:
                continue
            alive[v] = False
            for code in range(width):
                u = table[v][code]
                if u >= 0 and not removed[v][code]:
                    removed[v][code] = True
                    removed[u][code ^ 1] = True
                    if alive[u]:
                        deg[u] -= 1
                        if deg[u] <= 1:
                            stack.append(u)
        core_table = tuple(
            tuple(
                table[v][code] if alive[v] and table[v][code] >= 0 and not removed[v][code] else -1
                for code in range(width)
            )
            for v in range(n)
        )
        self.graph = graph
        self.vertices = tuple(v for v in range(n) if alive[v])
        self.core_table = core_table
        self._member = tuple(alive)
        self._handle = kernels.make_handle(core_table)

    def contains_vertex(self, v):
        return self._member[v]

    def edges(self):
        """Positive core edges (src, label, dst)."""
        for v in self.vertices:
            row = self.core_table[v]
            for i in range(self.graph.rank):
                if row[2 * i] >= 0:
                    yield (v, i, row[2 * i])

    def reads_loop_at(self, v, word: Word) -> bool:
        """Does ``word`` trace a closed path at ``v`` staying inside the core?

        ``word`` should be cyclically reduced and ``v`` a core vertex; the
        trace exits early as soon as it would leave the core.
        """
        return kernels.trace(self._handle, v, word.letters) == v


def cyclic_core(graph: SubgroupGraph) -> CyclicCore:
    return CyclicCore(graph)


def intersect(g1: SubgroupGraph, g2: SubgroupGraph) -> SubgroupGraph:
    """Fiber product component of the two base vertices (the intersection)."""
    if g1.rank != g2.rank:
        raise InputError("alphabet mismatch")
    width = 2 * g1.rank
    t1, t2 = g1.table, g2.table
    ids = {(0, 0): 0}
    order = [(0, 0)]
    rows = []
    for u1, u2 in order:
        r1, r2 = t1[u1], t2[u2]
        row = [-1] * width
        for code in range(width):
            a, b = r1[code], r2[code]
            if a >= 0 and b >= 0:
                j = ids.get((a, b))
                if j is None:
                    j = len(order)
                    ids[(a, b)] = j
                    order.append((a, b))
                row[code] = j
        rows.append(row)
    return SubgroupGraph._finish(g1.rank, rows, 0)


def schreier_graph(alphabet, hom: Homomorphism, image_subgroup) -> SubgroupGraph:
    """Schreier coset graph of a subgroup of the homomorphism's image.

    Represents the full preimage of ``image_subgroup``; when that subgroup is
    the image of some H, the preimage is H * ker(hom).  Always has finite
    index, equal to the number of cosets.
    """
    rank = _rank_of(alphabet)
    if rank != hom.alphabet.rank:
        raise InputError("alphabet mismatch")
    k = hom.degree
    sub = frozenset(tuple(p) for p in image_subgroup)
    if not is_closed(sub, k):
        raise InputError("image subgroup is not closed under product and inverse")
    group = hom.image_group()
    if not sub <= group:
        raise InputError("image subgroup must lie in the image of the homomorphism")

    def coset_key(g):
        return frozenset(perm_mul(s, g) for s in sub)

    steps = []
    for img in hom.images:
        steps.append(img)
        steps.append(perm_inv(img))
    ids = {coset_key(perm_identity(k)): 0}
    reps = [perm_identity(k)]
    rows = []
    for rep in reps:
        row = []
        for p in steps:
            g2 = perm_mul(rep, p)
            key = coset_key(g2)
            j = ids.get(key)
            if j is None:
                j = len(reps)
                ids[key] = j
                reps.append(g2)
            row.append(j)
        rows.append(row)
    return SubgroupGraph._finish(rank, rows, 0)
