"""Command-line front end: deterministic JSON on stdout, logs on stderr.

Exit codes: 0 for a decided answer (yes or no), 2 when budgets were exhausted
without a decision, 1 for input errors.
"""

import argparse
import json
import logging
import sys

from .conjugacy import conjugator, element_into_conjugator, into_conjugator
from .errors import InputError
from .formats import read_presentation_file, read_subgroup_file
from .perms import Homomorphism, parse_cycles
from .quotients import combine_witnesses, find_witness, finite_into_conjugate, witness_subgroup
from .semidecide import (
    Budget,
    Presentation,
    mihailova_generators,
    mihailova_probe,
    normal_closure_approximant,
    semi_decide_into,
)
from .stallings import build_subgroup_graph, intersect

log = logging.getLogger("conjsep")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNKNOWN = 2


def _load_subgroup(path):
    alphabet, gens = read_subgroup_file(path)
    return alphabet, gens, build_subgroup_graph(alphabet, gens)


def _same_alphabet(a1, a2):
    if a1.names != a2.names:
        raise InputError(f"alphabet mismatch: {list(a1.names)} vs {list(a2.names)}")
    return a1


def _conj_json(alphabet, answer):
    out = {"decision": answer.status}
    if answer.conjugator is not None:
        out["conjugator"] = alphabet.format_word(answer.conjugator)
    out["checkedVertices"] = answer.checked_vertices
    return out


def _revalidate_semidecision(presentation, h1_gens, h2_gens, result):
    """Re-check the certificate of a decided search before it is printed."""
    if result.status == "yes":
        level = result.budget_spent[1]
        enlarged = list(h2_gens) + normal_closure_approximant(presentation, level)
        target = build_subgroup_graph(presentation.alphabet, enlarged)
        if not all(target.contains(u.conjugate(result.conjugator)) for u in h1_gens):
            raise RuntimeError("internal error: yes certificate failed re-validation")
    elif result.status == "no":
        witness = result.witness
        c = finite_into_conjugate(witness.hom.image_group(), witness.h1_image, witness.h2_image)
        if c is not None:
            raise RuntimeError("internal error: witness failed re-validation")
    return result


def _semidecision_json(alphabet, result):
    out = {"status": result.status}
    if result.conjugator is not None:
        out["conjugator"] = alphabet.format_word(result.conjugator)
    if result.witness is not None:
        out["witness"] = result.witness.to_json_dict()
    out["budgetSpent"] = {
        "conjugatorLength": result.budget_spent[0],
        "approximantLevel": result.budget_spent[1],
        "maxDegree": result.budget_spent[2],
    }
    return out


def _budget(args):
    return Budget(args.max_conj_len, args.max_level, args.max_degree)


def _cmd_core(args):
    _, _, graph = _load_subgroup(args.sub)
    return EXIT_OK, graph.to_json_dict()


def _cmd_member(args):
    alphabet, _, graph = _load_subgroup(args.sub)
    word = alphabet.parse_word(args.word)
    return EXIT_OK, {"member": graph.contains(word)}


def _cmd_index(args):
    _, _, graph = _load_subgroup(args.sub)
    idx = graph.index()
    return EXIT_OK, {"index": "infinite" if idx is None else idx}


def _cmd_rank(args):
    _, _, graph = _load_subgroup(args.sub)
    return EXIT_OK, {"rank": graph.free_rank()}


def _cmd_basis(args):
    alphabet, _, graph = _load_subgroup(args.sub)
    return EXIT_OK, {"basis": [alphabet.format_word(w) for w in graph.basis()]}


def _cmd_intersect(args):
    a1, _, g1 = _load_subgroup(args.sub1)
    a2, _, g2 = _load_subgroup(args.sub2)
    _same_alphabet(a1, a2)
    return EXIT_OK, intersect(g1, g2).to_json_dict()


def _cmd_conj_into(args):
    a1, h1_gens, _ = _load_subgroup(args.h1)
    a2, _, g2 = _load_subgroup(args.h2)
    alphabet = _same_alphabet(a1, a2)
    answer = into_conjugator(alphabet, h1_gens, g2)
    return EXIT_OK, _conj_json(alphabet, answer)


def _cmd_conj(args):
    a1, h1_gens, _ = _load_subgroup(args.h1)
    a2, h2_gens, _ = _load_subgroup(args.h2)
    alphabet = _same_alphabet(a1, a2)
    answer = conjugator(alphabet, h1_gens, h2_gens)
    return EXIT_OK, _conj_json(alphabet, answer)


def _cmd_elt_into(args):
    alphabet, _, graph = _load_subgroup(args.sub)
    word = alphabet.parse_word(args.word)
    answer = element_into_conjugator(alphabet, word, graph)
    return EXIT_OK, _conj_json(alphabet, answer)


def _cmd_witness(args):
    a1, h1_gens, _ = _load_subgroup(args.h1)
    a2, h2_gens, _ = _load_subgroup(args.h2)
    alphabet = _same_alphabet(a1, a2)
    if args.pres is not None:
        presentation = read_presentation_file(args.pres)
        _same_alphabet(presentation.alphabet, alphabet)
    else:
        presentation = Presentation(alphabet, ())
    log.info("searching witnesses up to degree %d", args.max_degree)
    witness = find_witness(presentation, h1_gens, h2_gens, args.max_degree)
    if witness is None:
        return EXIT_UNKNOWN, {"witness": None, "maxDegree": args.max_degree}
    return EXIT_OK, witness.to_json_dict()


def _load_hom(path, alphabet):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    degree = data["degree"]
    images = []
    for name in alphabet.names:
        if name not in data["images"]:
            raise InputError(f"witness file lacks an image for generator {name!r}")
        images.append(parse_cycles(data["images"][name], degree))
    return Homomorphism(alphabet, degree, tuple(images))


def _cmd_witness_subgroup(args):
    alphabet, h1_gens, _ = _load_subgroup(args.sub)
    hom = _load_hom(args.witness, alphabet)
    graph = witness_subgroup(alphabet, hom, h1_gens)
    return EXIT_OK, graph.to_json_dict()


def _cmd_combine_witness(args):
    a0, _, g1 = _load_subgroup(args.g1)
    a1, h1_gens, _ = _load_subgroup(args.h1)
    a2, h2_gens, _ = _load_subgroup(args.h2)
    alphabet = _same_alphabet(_same_alphabet(a0, a1), a2)
    witnesses = []
    for path in args.witness:
        aw, _, gw = _load_subgroup(path)
        _same_alphabet(alphabet, aw)
        witnesses.append(gw)
    combined = combine_witnesses(alphabet, g1, h1_gens, h2_gens, witnesses)
    return EXIT_OK, combined.to_json_dict()


def _cmd_semidecide(args):
    presentation = read_presentation_file(args.pres)
    a1, h1_gens, _ = _load_subgroup(args.h1)
    a2, h2_gens, _ = _load_subgroup(args.h2)
    _same_alphabet(_same_alphabet(presentation.alphabet, a1), a2)
    result = semi_decide_into(presentation, h1_gens, h2_gens, _budget(args))
    _revalidate_semidecision(presentation, h1_gens, h2_gens, result)
    code = EXIT_OK if result.status in ("yes", "no") else EXIT_UNKNOWN
    return code, _semidecision_json(presentation.alphabet, result)


def _cmd_mihailova(args):
    source = read_presentation_file(args.hpres)
    instance = mihailova_generators(source)
    word = source.alphabet.parse_word(args.word)
    log.info(
        "ambient generators: %s; pair subgroup rank %d",
        " ".join(instance.ambient.alphabet.names),
        len(instance.l_gens),
    )
    result = mihailova_probe(instance, word, _budget(args))
    _revalidate_semidecision(instance.ambient, [word], list(instance.l_gens), result)
    code = EXIT_OK if result.status in ("yes", "no") else EXIT_UNKNOWN
    return code, _semidecision_json(instance.ambient.alphabet, result)


def _add_budget_flags(sub):
    sub.add_argument("--max-conj-len", type=int, default=8, help="conjugator length budget")
    sub.add_argument("--max-level", type=int, default=2, help="relator-conjugate level budget")
    sub.add_argument("--max-degree", type=int, default=4, help="finite quotient degree budget")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="conjsep",
        description="Subgroup conjugacy deciders for free groups and witness search "
        "for finitely presented groups; JSON output on stdout.",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress on stderr")
    parser.add_argument("--format", choices=["json"], default="json", help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core", help="folded core graph of a subgroup file")
    p.add_argument("--sub", required=True)
    p.set_defaults(func=_cmd_core)

    p = sub.add_parser("member", help="membership of a word in a subgroup")
    p.add_argument("--sub", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("index", help="subgroup index (or infinite)")
    p.add_argument("--sub", required=True)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("rank", help="rank of the subgroup as a free group")
    p.add_argument("--sub", required=True)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("basis", help="free basis of the subgroup")
    p.add_argument("--sub", required=True)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("intersect", help="intersection of two subgroups")
    p.add_argument("--sub1", required=True)
    p.add_argument("--sub2", required=True)
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("conj", help="are the two subgroups conjugate?")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.set_defaults(func=_cmd_conj)

    p = sub.add_parser("conj-into", help="is H1 conjugate into H2?")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.set_defaults(func=_cmd_conj_into)

    p = sub.add_parser("elt-into", help="is some conjugate of a word in the subgroup?")
    p.add_argument("--word", required=True)
    p.add_argument("--sub", required=True)
    p.set_defaults(func=_cmd_elt_into)

    p = sub.add_parser(
        "witness",
        help="finite quotient in which the image of H2 is not conjugate into the image of H1",
    )
    p.add_argument("--pres", help="presentation file; default is the free group on H1's alphabet")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("witness-subgroup", help="finite-index witness subgroup H1 * ker(hom)")
    p.add_argument("--sub", required=True, help="subgroup file for H1")
    p.add_argument("--witness", required=True, help="witness JSON file")
    p.set_defaults(func=_cmd_witness_subgroup)

    p = sub.add_parser("combine-witness", help="intersect per-coset witnesses over a finite-index subgroup")
    p.add_argument("--g1", required=True, help="finite-index subgroup file")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.add_argument("--witness", required=True, nargs="+", help="one subgroup file per coset")
    p.set_defaults(func=_cmd_combine_witness)

    p = sub.add_parser("semidecide", help="two-sided search: is H1 conjugate into H2 in G?")
    p.add_argument("--pres", required=True)
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_semidecide)

    p = sub.add_parser("mihailova", help="probe whether a word dies in a presented group")
    p.add_argument("--hpres", required=True, help="presentation file for H")
    p.add_argument("--word", required=True, help="word over H's generators")
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_mihailova)

    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(message)s",
    )
    try:
        code, payload = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(payload, separators=(",", ":")))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
