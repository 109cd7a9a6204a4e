"""On-disk formats: subgroup files and presentation files.

Subgroup file: a ``gens: <name>...`` header line, then one generator word per
line.  Presentation file: the same header, then ``rel: <word>`` lines.  Blank
lines are ignored; words use the whitespace token grammar of
:meth:`Alphabet.parse_word`.
"""

from .errors import InputError, ParseError
from .semidecide import Presentation
from .words import Alphabet


def _lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line:
                yield lineno, line


def _parse_header(path, lineno, line):
    head, _, rest = line.partition(":")
    if head.strip() != "gens":
        raise ParseError("expected 'gens:' header", path, lineno, head.strip())
    try:
        return Alphabet(rest.split())
    except InputError as exc:
        raise ParseError(str(exc), path, lineno) from None


def read_subgroup_file(path):
    """Parse a subgroup file into its alphabet and generator words."""
    alphabet = None
    gens = []
    for lineno, line in _lines(path):
        if alphabet is None:
            alphabet = _parse_header(path, lineno, line)
        else:
            gens.append(alphabet.parse_word(line, path, lineno))
    if alphabet is None:
        raise ParseError("missing 'gens:' header", path)
    return alphabet, gens


def read_presentation_file(path):
    """Parse a presentation file into a :class:`Presentation`."""
    alphabet = None
    relators = []
    for lineno, line in _lines(path):
        if alphabet is None:
            alphabet = _parse_header(path, lineno, line)
            continue
        head, _, rest = line.partition(":")
        if head.strip() != "rel":
            raise ParseError("expected 'rel:' line", path, lineno, head.strip())
        relators.append(alphabet.parse_word(rest, path, lineno))
    if alphabet is None:
        raise ParseError("missing 'gens:' header", path)
    return Presentation(alphabet, tuple(relators))


def format_subgroup_file(alphabet, gens):
    lines = ["gens: " + " ".join(alphabet.names)]
    lines.extend(alphabet.format_word(w) for w in gens)
    return "\n".join(lines) + "\n"


def format_presentation_file(presentation):
    lines = ["gens: " + " ".join(presentation.alphabet.names)]
    lines.extend("rel: " + presentation.alphabet.format_word(r) for r in presentation.relators)
    return "\n".join(lines) + "\n"
