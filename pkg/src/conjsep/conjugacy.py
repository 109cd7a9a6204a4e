"""Deciders for subgroup conjugacy questions in free groups.

All containments use the convention w**c = c^-1 * w * c.  The core scan
follows the polynomial-time recipe: cyclically reduce one generator of the
first subgroup, conjugate the rest accordingly, then look for a vertex of the
second graph's cyclic core at which every generator reads a loop.
"""

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .errors import InputError
from .stallings import SubgroupGraph, _rank_of, build_subgroup_graph, cyclic_core
from .words import Word


@dataclass(frozen=True)
class ConjugacyAnswer:
    """Decision plus certificate; ``conjugator`` is present exactly on yes."""

    decision: bool
    conjugator: Optional[Word] = None
    checked_vertices: int = 0

    @property
    def status(self):
        return "yes" if self.decision else "no"


def into_conjugator(alphabet, h1_gens, h2: SubgroupGraph) -> ConjugacyAnswer:
    """Decide whether some conjugate of <h1_gens> lies inside the subgroup of ``h2``.

    On yes the returned g satisfies w**g in H2 for every generator w, which
    is re-checked by membership before returning.  Runs one pass over the
    cyclic core: O(|core| * total generator length) after folding.
    """
    rank = _rank_of(alphabet)
    if h2.rank != rank:
        raise InputError("alphabet mismatch")
    gens = [h2._check_word(w) for w in h1_gens if w]
    if not gens:
        return ConjugacyAnswer(True, Word(), 0)

    first, prefix = gens[0].cyclic_reduce()
    conjugated = [w.conjugate(prefix) for w in gens]
    core = cyclic_core(h2)
    hits = kernels.scan_loops(
        h2._handle,
        core._handle,
        core.vertices,
        first.letters,
        [w.letters for w in conjugated[1:]],
    )
    checked = len(core.vertices)
    if not hits:
        return ConjugacyAnswer(False, None, checked)

    # shortest conjugator wins; ties go to the lexicographically least path word
    best_key = None
    best = None
    for v in hits:
        path = h2.path_word(v)
        g = prefix * path.inverse()
        key = (len(g), path.letters)
        if best_key is None or key < best_key:
            best_key = key
            best = g
    if not all(h2.contains(w.conjugate(best)) for w in gens):
        raise RuntimeError("internal error: conjugator failed membership validation")
    return ConjugacyAnswer(True, best, checked)


def conjugator(alphabet, h1_gens, h2_gens) -> ConjugacyAnswer:
    """Decide whether the two subgroups are conjugate.

    Runs the into-conjugacy test in both directions; mutual containment up to
    conjugacy forces equality in free groups, so on yes the returned g
    satisfies H1**g = H2 exactly.
    """
    g1 = build_subgroup_graph(alphabet, h1_gens)
    g2 = build_subgroup_graph(alphabet, h2_gens)
    forward = into_conjugator(alphabet, h1_gens, g2)
    if not forward.decision:
        return ConjugacyAnswer(False, None, forward.checked_vertices)
    backward = into_conjugator(alphabet, h2_gens, g1)
    checked = forward.checked_vertices + backward.checked_vertices
    if not backward.decision:
        return ConjugacyAnswer(False, None, checked)
    return ConjugacyAnswer(True, forward.conjugator, checked)


def element_into_conjugator(alphabet, word: Word, h: SubgroupGraph) -> ConjugacyAnswer:
    """Decide whether some conjugate of a single element lies in the subgroup."""
    return into_conjugator(alphabet, [word], h)
