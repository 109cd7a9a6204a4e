"""Search for finite-quotient witnesses of non-conjugacy.

A witness for "B is not conjugate into A" is a homomorphism onto a finite
permutation group under which no conjugate of the image of B lands inside the
image of A; pulled back through its Schreier graph it becomes a finite-index
subgroup containing A that no conjugate of B enters.
"""

from dataclasses import dataclass
from itertools import permutations

from .conjugacy import into_conjugator
from .errors import InputError
from .perms import Homomorphism, closure, format_cycles, identity, inv, mul
from .stallings import SubgroupGraph, _rank_of, build_subgroup_graph, intersect, schreier_graph


@dataclass(frozen=True)
class Witness:
    """Certificate that the second subgroup is not conjugate into the first."""

    hom: Homomorphism
    h1_image: frozenset
    h2_image: frozenset

    def to_json_dict(self):
        names = self.hom.alphabet.names
        return {
            "degree": self.hom.degree,
            "images": {name: format_cycles(p) for name, p in zip(names, self.hom.images)},
            "h1ImageSize": len(self.h1_image),
            "h2ImageSize": len(self.h2_image),
        }


def enumerate_homs(presentation, degree):
    """Yield every relator-respecting assignment of generators to degree-k permutations.

    Enumeration is lexicographic over the image tuples (permutations in
    one-line lexicographic order); an assignment is abandoned as soon as a
    relator whose support is fully assigned fails.
    """
    alphabet = presentation.alphabet
    rank = alphabet.rank
    perms = list(permutations(range(degree)))
    ident = identity(degree)
    by_last = [[] for _ in range(rank)]
    for r in presentation.relators:
        if r.max_gen() >= rank:
            raise InputError("relator uses a generator outside the alphabet")
        if r:
            by_last[r.max_gen()].append(r)

    images = [None] * rank

    def evaluate(word):
        out = ident
        for code in word.letters:
            p = images[code >> 1]
            if code & 1:
                p = inv(p)
            out = mul(out, p)
        return out

    def assign(i):
        if i == rank:
            yield Homomorphism(alphabet, degree, tuple(images))
            return
        for p in perms:
            images[i] = p
            if all(evaluate(r) == ident for r in by_last[i]):
                yield from assign(i + 1)
        images[i] = None

    yield from assign(0)


def image_closure(hom, gens):
    """Subgroup of the image generated by the evaluated words."""
    return closure([hom.evaluate(w) for w in gens], hom.degree)


def finite_into_conjugate(group_elems, a, b):
    """Some c in ``group_elems`` with c^-1 * b * c inside ``a``, else None.

    Exhaustive scan in sorted order, so the result is deterministic.
    """
    a = frozenset(map(tuple, a))
    for c in sorted(group_elems):
        ci = inv(c)
        if all(mul(mul(ci, x), c) in a for x in b):
            return c
    return None


def find_witness_at_degree(presentation, h1_gens, h2_gens, degree):
    for hom in enumerate_homs(presentation, degree):
        h1i = image_closure(hom, h1_gens)
        h2i = image_closure(hom, h2_gens)
        if finite_into_conjugate(hom.image_group(), h1i, h2i) is None:
            return Witness(hom, frozenset(h1i), frozenset(h2i))
    return None


def find_witness(presentation, h1_gens, h2_gens, max_degree):
    """First hom under which the image of H2 is not conjugate into the image of H1.

    Scans degrees 1..max_degree, homs in enumeration order, so the returned
    witness is the minimal one; None when the budget is exhausted (which
    decides nothing).
    """
    for degree in range(1, max_degree + 1):
        witness = find_witness_at_degree(presentation, h1_gens, h2_gens, degree)
        if witness is not None:
            return witness
    return None


def witness_subgroup(alphabet, hom, h1_gens) -> SubgroupGraph:
    """Realize a witness hom as the finite-index subgroup H1 * ker(hom).

    Only meaningful when the ambient group is free; every h1 generator is a
    member and the index equals [image : image of H1].
    """
    return schreier_graph(alphabet, hom, image_closure(hom, h1_gens))


def coset_action_hom(alphabet, graph: SubgroupGraph) -> Homomorphism:
    """Permutation action on the cosets of a finite-index subgroup."""
    if graph.index() is None:
        raise InputError("infinite index")
    images = tuple(
        tuple(graph.table[v][2 * i] for v in range(graph.vertex_count))
        for i in range(graph.rank)
    )
    return Homomorphism(alphabet, graph.vertex_count, images)


def combine_witnesses(alphabet, g1, h1_gens, h2_gens, per_coset_witnesses) -> SubgroupGraph:
    """Intersect per-coset witnesses into one that works in the whole group.

    ``per_coset_witnesses[i]`` is paired with the left-coset representative
    g_i = (i-th spanning-tree word of g1)^-1: when H2**g_i lies inside g1 it
    must be a finite-index subgroup of g1 that no g1-conjugate of H2**g_i
    enters (checked by the free-group decider in g1's own basis), otherwise
    it must equal g1.  The returned intersection D contains H1 and admits no
    conjugate of H2 at all, which is re-verified before returning.
    """
    rank = _rank_of(alphabet)
    if g1.rank != rank:
        raise InputError("alphabet mismatch")
    if g1.index() is None:
        raise InputError("the ambient witness subgroup must have finite index")
    reps = g1.coset_reps()
    if len(per_coset_witnesses) != len(reps):
        raise InputError(
            f"expected {len(reps)} per-coset witnesses, got {len(per_coset_witnesses)}"
        )
    h1_gens = list(h1_gens)
    for w in h1_gens:
        if not g1.contains(w):
            raise InputError("the first subgroup must lie inside the finite-index subgroup")

    for i, (rep, d_i) in enumerate(zip(reps, per_coset_witnesses)):
        if not all(d_i.contains(w) for w in h1_gens):
            raise InputError(f"per-coset witness {i} does not contain the first subgroup")
        if d_i.index() is None:
            raise InputError(f"per-coset witness {i} must have finite index")
        g_i = rep.inverse()
        conj = [w.conjugate(g_i) for w in h2_gens]
        if all(g1.contains(w) for w in conj):
            if not g1.contains_subgroup(d_i):
                raise InputError(f"per-coset witness {i} is not contained in the subgroup")
            sub_rank = g1.free_rank()
            conj_rw = [g1.rewrite_in_basis(w) for w in conj]
            d_rw = [g1.rewrite_in_basis(w) for w in d_i.basis()]
            d_inside = build_subgroup_graph(sub_rank, d_rw)
            if into_conjugator(sub_rank, conj_rw, d_inside).decision:
                raise InputError(
                    f"per-coset witness {i} admits a conjugate of the second subgroup"
                )
        elif d_i != g1:
            raise InputError(
                f"conjugate {i} of the second subgroup leaves the subgroup; "
                f"witness {i} must equal the subgroup itself"
            )

    combined = per_coset_witnesses[0]
    for d_i in per_coset_witnesses[1:]:
        combined = intersect(combined, d_i)
    if not all(combined.contains(w) for w in h1_gens):
        raise RuntimeError("internal error: combined witness lost the first subgroup")
    if into_conjugator(alphabet, h2_gens, combined).decision:
        raise RuntimeError("internal error: combined witness admits the second subgroup")
    return combined
