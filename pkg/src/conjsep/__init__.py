"""Subgroup conjugacy in free groups via Stallings graphs, finite-quotient
witnesses of non-conjugacy, and a two-sided semi-decision procedure for
finitely presented groups."""

from .conjugacy import ConjugacyAnswer, conjugator, element_into_conjugator, into_conjugator
from .errors import InputError, ParseError
from .kernels import BACKEND
from .perms import Homomorphism
from .quotients import (
    Witness,
    coset_action_hom,
    combine_witnesses,
    enumerate_homs,
    find_witness,
    finite_into_conjugate,
    image_closure,
    witness_subgroup,
)
from .semidecide import (
    Budget,
    MihailovaInstance,
    Presentation,
    SemiDecision,
    mihailova_generators,
    mihailova_probe,
    normal_closure_approximant,
    semi_decide_into,
)
from .stallings import (
    CyclicCore,
    LabeledGraph,
    SubgroupGraph,
    based_core,
    build_subgroup_graph,
    cyclic_core,
    fold,
    intersect,
    schreier_graph,
)
from .words import Alphabet, Word, free_reduce, reduced_words, reduced_words_of_length

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BACKEND",
    "Budget",
    "ConjugacyAnswer",
    "CyclicCore",
    "Homomorphism",
    "InputError",
    "LabeledGraph",
    "MihailovaInstance",
    "ParseError",
    "Presentation",
    "SemiDecision",
    "SubgroupGraph",
    "Witness",
    "based_core",
    "build_subgroup_graph",
    "combine_witnesses",
    "conjugator",
    "coset_action_hom",
    "cyclic_core",
    "element_into_conjugator",
    "enumerate_homs",
    "find_witness",
    "finite_into_conjugate",
    "fold",
    "free_reduce",
    "image_closure",
    "intersect",
    "into_conjugator",
    "mihailova_generators",
    "mihailova_probe",
    "normal_closure_approximant",
    "reduced_words",
    "reduced_words_of_length",
    "schreier_graph",
    "semi_decide_into",
    "witness_subgroup",
]
