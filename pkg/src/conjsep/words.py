"""Freely reduced words over a ranked alphabet.

A letter is stored as a single int code ``2*i`` for the i-th generator and
``2*i + 1`` for its inverse, so inverting a letter is ``code ^ 1``.  Words are
immutable and always freely reduced; the empty word is the identity.
"""

import re

from .errors import InputError, ParseError

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")


def letter(gen, sign):
    """Encode a (generator index, sign) pair as a letter code."""
    if sign == 1:
        return 2 * gen
    if sign == -1:
        return 2 * gen + 1
    raise InputError(f"sign must be +1 or -1, got {sign!r}")


def letter_gen(code):
    return code >> 1


def letter_sign(code):
    return -1 if code & 1 else 1


def free_reduce(letters):
    """Reduce a sequence of letter codes, cancelling adjacent inverse pairs.

    Returns the unique freely reduced form as a tuple; the result does not
    depend on the order cancellations are applied in.
    """
    out = []
    for code in letters:
        if out and out[-1] == code ^ 1:
            out.pop()
        else:
            out.append(code)
    return tuple(out)


class Word:
    """A freely reduced word; the group operation is ``*``."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = free_reduce(letters)

    @classmethod
    def from_pairs(cls, pairs):
        """Build a word from (generator index, sign) pairs."""
        return cls([letter(g, s) for g, s in pairs])

    def pairs(self):
        return [(c >> 1, -1 if c & 1 else 1) for c in self.letters]

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __lt__(self, other):
        # length-lexicographic; used wherever a deterministic word order is pinned
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(tuple(c ^ 1 for c in reversed(self.letters)))

    def conjugate(self, c):
        """Return self**c = c^-1 * self * c."""
        return c.inverse() * self * c

    def cyclic_reduce(self):
        """Split off the maximal conjugating prefix.

        Returns ``(core, prefix)`` with ``self = prefix * core * prefix^-1``
        and ``core`` cyclically reduced (its first and last letters are not
        mutually inverse).
        """
        ls = self.letters
        lo, hi = 0, len(ls)
        while hi - lo >= 2 and ls[lo] == ls[hi - 1] ^ 1:
            lo += 1
            hi -= 1
        return Word(ls[lo:hi]), Word(ls[:lo])

    def is_cyclically_reduced(self):
        ls = self.letters
        return len(ls) < 2 or ls[0] != ls[-1] ^ 1

    def max_gen(self):
        """Largest generator index used, or -1 for the identity."""
        return max((c >> 1 for c in self.letters), default=-1)

    def __repr__(self):
        return f"Word({list(self.letters)!r})"


IDENTITY = Word()


def reduced_words_of_length(rank, n):
    """Yield every reduced word of exactly ``n`` letters, lexicographically."""
    width = 2 * rank

    def extend(prefix):
        if len(prefix) == n:
            yield Word(prefix)
            return
        last = prefix[-1] if prefix else None
        for code in range(width):
            if last is None or code != last ^ 1:
                yield from extend(prefix + (code,))

    yield from extend(())


def reduced_words(rank, max_len):
    """Yield all reduced words of length <= max_len, by length then lex."""
    for n in range(max_len + 1):
        yield from reduced_words_of_length(rank, n)


class Alphabet:
    """Named basis of a free group; names are presentation-layer only."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise InputError("alphabet needs at least one generator")
        for name in names:
            if not _NAME_RE.match(name):
                raise InputError(f"invalid generator name {name!r}")
        if len(set(names)) != len(names):
            raise InputError("generator names must be pairwise distinct")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    @property
    def rank(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def gen(self, i):
        """The i-th generator as a one-letter word."""
        return Word((2 * i,))

    def check_word(self, word):
        if word.max_gen() >= self.rank:
            raise InputError(
                f"word uses generator index {word.max_gen()}, alphabet has rank {self.rank}"
            )
        return word

    def parse_word(self, text, filename=None, line=None):
        """Parse the whitespace-separated word grammar; "1" is the identity."""
        tokens = text.split()
        if tokens == ["1"]:
            return IDENTITY
        codes = []
        for tok in tokens:
            name, neg = tok, False
            if tok.endswith("^-1"):
                name, neg = tok[:-3], True
            i = self._index.get(name)
            if i is None:
                raise ParseError("unknown generator", filename, line, tok)
            codes.append(2 * i + 1 if neg else 2 * i)
        return Word(codes)

    def format_word(self, word):
        """Inverse of :meth:`parse_word`: ``parse(format(w)) == w``."""
        if not word:
            return "1"
        self.check_word(word)
        parts = []
        for code in word.letters:
            name = self.names[code >> 1]
            parts.append(name + "^-1" if code & 1 else name)
        return " ".join(parts)
