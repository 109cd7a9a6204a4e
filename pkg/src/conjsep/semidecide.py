"""Two-sided semi-decision of into-conjugacy in finitely presented groups.

One process hunts for a finite quotient separating the subgroups (a sound
"no"); the other hunts for a conjugator certified by Stallings membership
over the target generators enlarged by staged conjugates of the relators (a
sound "yes").  Budgets make "unknown" an honest third answer: the question is
undecidable in general.

Includes the classic direct-product encoding of a word problem: a cyclic
subgroup on one coordinate is conjugate into the pair subgroup L_H exactly
when the word dies in H.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import InputError
from .quotients import Witness, find_witness_at_degree
from .stallings import build_subgroup_graph
from .words import Alphabet, Word, reduced_words_of_length


@dataclass(frozen=True)
class Presentation:
    """A finitely presented group: free generators plus reduced relator words."""

    alphabet: Alphabet
    relators: tuple

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            if r.max_gen() >= self.alphabet.rank:
                raise InputError("relator uses a generator outside the alphabet")

    @property
    def rank(self):
        return self.alphabet.rank


@dataclass(frozen=True)
class Budget:
    max_conj_len: int = 8
    max_level: int = 2
    max_degree: int = 4


@dataclass(frozen=True)
class SemiDecision:
    """Outcome of the interleaved search; certificates accompany yes/no."""

    status: str  # "yes" | "no" | "unknown"
    conjugator: Optional[Word]
    witness: Optional[Witness]
    budget_spent: tuple  # (conjugator length, approximant level, max degree)


def normal_closure_approximant(presentation, level):
    """Conjugates w^-1 r^±1 w of the relators over all words w with |w| <= level.

    Stage ``level`` is contained in stage ``level + 1`` and the union over
    all stages generates the normal closure of the relators.  Reduced,
    deduplicated, deterministic order.
    """
    out = []
    seen = set()
    signed = []
    for r in presentation.relators:
        signed.append(r)
        signed.append(r.inverse())
    for n in range(level + 1):
        for w in reduced_words_of_length(presentation.rank, n):
            wi = w.inverse()
            for s in signed:
                c = wi * s * w
                if c and c.letters not in seen:
                    seen.add(c.letters)
                    out.append(c)
    return out


def semi_decide_into(presentation, h1_gens, h2_gens, budget: Budget) -> SemiDecision:
    """Is H1 conjugate into H2 in the presented group?  Interleaved search.

    Round t runs the quotient scan at degree t+1, then membership tests for
    every conjugator length / approximant level pair summing to t.  A yes
    means some g with every g^-1 u g a product of h2 generators and relator
    conjugates; a no carries a finite quotient in which the image of H1 is
    not conjugate into the image of H2.  Either certificate is sound;
    enlarging budgets can only turn unknown into an answer.
    """
    alphabet = presentation.alphabet
    rank = alphabet.rank
    h2_gens = list(h2_gens)
    for w in list(h1_gens) + h2_gens:
        if w.max_gen() >= rank:
            raise InputError("word uses a generator outside the alphabet")
    h1_gens = [w for w in h1_gens if w]
    if not h1_gens:
        return SemiDecision("yes", Word(), None, (0, 0, 0))

    level_graphs = {}

    def graph_at(level):
        if level not in level_graphs:
            enlarged = h2_gens + normal_closure_approximant(presentation, level)
            level_graphs[level] = build_subgroup_graph(alphabet, enlarged)
        return level_graphs[level]

    spent = [0, 0, 0]
    last_round = max(budget.max_degree - 1, budget.max_conj_len + budget.max_level)
    for t in range(last_round + 1):
        degree = t + 1
        if degree <= budget.max_degree:
            spent[2] = degree
            witness = find_witness_at_degree(presentation, h2_gens, h1_gens, degree)
            if witness is not None:
                return SemiDecision("no", None, witness, tuple(spent))
        for length in range(t + 1):
            level = t - length
            if length > budget.max_conj_len or level > budget.max_level:
                continue
            spent[0] = max(spent[0], length)
            spent[1] = max(spent[1], level)
            target = graph_at(level)
            for g in reduced_words_of_length(rank, length):
                if all(target.contains(u.conjugate(g)) for u in h1_gens):
                    return SemiDecision("yes", g, None, tuple(spent))
    return SemiDecision("unknown", None, None, tuple(spent))


@dataclass(frozen=True)
class MihailovaInstance:
    """Word-problem encoding of a presentation inside a product of free groups."""

    ambient: Presentation
    l_gens: tuple
    source: Presentation


def mihailova_generators(h_presentation) -> MihailovaInstance:
    """Build the pair subgroup of F_s x F_s attached to a presentation.

    The ambient group has generators a1..as, b1..bs and all s^2 commutator
    relators [a_i, b_j]; the pair subgroup is generated by the diagonal pairs
    a_i b_i plus each relator rewritten over the b letters.
    """
    s = h_presentation.alphabet.rank
    names = [f"a{i + 1}" for i in range(s)] + [f"b{i + 1}" for i in range(s)]
    ambient_alphabet = Alphabet(names)
    relators = []
    for i in range(s):
        for j in range(s):
            a, b = 2 * i, 2 * (s + j)
            relators.append(Word((a, b, a ^ 1, b ^ 1)))
    ambient = Presentation(ambient_alphabet, tuple(relators))
    l_gens = [Word((2 * i, 2 * (s + i))) for i in range(s)]
    for r in h_presentation.relators:
        l_gens.append(Word(tuple(code + 2 * s for code in r.letters)))
    return MihailovaInstance(ambient, tuple(l_gens), h_presentation)


def mihailova_probe(instance: MihailovaInstance, u: Word, budget: Budget) -> SemiDecision:
    """Semi-decide whether ``u`` is trivial in the encoded group.

    Runs the into-conjugacy search for the cyclic subgroup on the a-copy of
    ``u`` against the pair subgroup: yes certifies u = 1 in H, no certifies
    u != 1 in H.
    """
    s = instance.source.alphabet.rank
    if u.max_gen() >= s:
        raise InputError("word uses a generator outside the source presentation")
    return semi_decide_into(instance.ambient, [u], list(instance.l_gens), budget)
