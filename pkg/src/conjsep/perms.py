"""Permutations of {0..k-1} as tuples, and homomorphisms into them.

The product ``mul(p, q)`` applies ``p`` first, matching left-to-right word
evaluation.
"""

from dataclasses import dataclass

from .errors import InputError
from .words import Alphabet, Word


def identity(degree):
    return tuple(range(degree))


def mul(p, q):
    return tuple(q[i] for i in p)


def inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def format_cycles(p):
    """Disjoint-cycle string, smallest moved point first: "(0 1)(2 3)", id = "()"."""
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cycle = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = p[j]
        parts.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(parts) if parts else "()"


def parse_cycles(text, degree):
    """Inverse of :func:`format_cycles` for a fixed degree."""
    text = text.strip()
    if text == "()":
        return identity(degree)
    if not text.startswith("(") or not text.endswith(")"):
        raise InputError(f"bad cycle notation {text!r}")
    out = list(range(degree))
    hit = set()
    for chunk in text[1:-1].split(")("):
        try:
            points = [int(t) for t in chunk.split()]
        except ValueError:
            raise InputError(f"bad cycle notation {text!r}") from None
        if len(points) < 2:
            raise InputError(f"bad cycle notation {text!r}")
        for a in points:
            if not 0 <= a < degree or a in hit:
                raise InputError(f"bad cycle notation {text!r} for degree {degree}")
            hit.add(a)
        for a, b in zip(points, points[1:]):
            out[a] = b
        out[points[-1]] = points[0]
    return tuple(out)


def closure(perms, degree):
    """Subgroup generated by ``perms``: breadth-first closure, contains id."""
    gens = [tuple(p) for p in perms]
    seen = {identity(degree)}
    frontier = []
    for p in gens:
        if p not in seen:
            seen.add(p)
            frontier.append(p)
    gens = gens + [inv(p) for p in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = mul(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def is_closed(perms, degree):
    elems = {tuple(p) for p in perms}
    if identity(degree) not in elems:
        return False
    return all(mul(p, q) in elems for p in elems for q in elems)


@dataclass(frozen=True)
class Homomorphism:
    """Assignment of the alphabet's generators to degree-k permutations."""

    alphabet: Alphabet
    degree: int
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.alphabet.rank:
            raise InputError("one image per generator required")
        for p in self.images:
            if sorted(p) != list(range(self.degree)):
                raise InputError(f"{p!r} is not a permutation of degree {self.degree}")

    def evaluate(self, word: Word):
        """Image of a word: the product of generator images along its letters."""
        out = identity(self.degree)
        for code in word.letters:
            p = self.images[code >> 1]
            if code & 1:
                p = inv(p)
            out = mul(out, p)
        return out

    def respects(self, relators):
        ident = identity(self.degree)
        return all(self.evaluate(r) == ident for r in relators)

    def image_group(self):
        return closure(self.images, self.degree)
