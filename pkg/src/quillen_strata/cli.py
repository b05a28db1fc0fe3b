"""Command-line surface.

Commands: spectrum, strata, subgroups, weyl, double-cosets, coequalize,
drinfeld-check, verify.  Parse failures exit 1; domain errors (unsupported
theory/group pairs, bound violations at computation time) exit 2 with a
machine-readable JSON object on stderr.  Output is deterministic: identical
invocations produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import checks
from .groups import (BoundExceeded, GroupError, GroupParseError, build_group,
                     double_cosets, minimal_generators, select_class,
                     subgroups_up_to_conjugacy, weyl)
from .orbit_cat import DiagramError, coequalize_raw
from .rings import (RingError, divides, is_separable, level_polynomial_P,
                    reduce_cyclo_mod_p)
from .spectrum import assemble_strong, assemble_weak, serialize
from .strata import (TheoryError, UnsupportedTheory, parse_theory, stratum,
                     theory_family_classes, weyl_action_kind)


class CliParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliParseError(message)


def _dump(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(text, path):
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _class_doc(cls):
    return {
        "order": cls.order,
        "index": cls.index,
        "conjugates": cls.conjugates,
        "normalizer_order": len(cls.normalizer_elements),
        "centralizer_order": len(cls.centralizer_elements),
        "abelian": cls.is_abelian(),
        "cyclic": cls.is_cyclic(),
        "generators": list(cls.generator_strings()),
    }


def _cmd_subgroups(args):
    G = build_group(args.group)
    classes = subgroups_up_to_conjugacy(G)
    doc = {
        "schema": "quillen-strata/subgroups/1",
        "group": args.group,
        "order": G.order,
        "classes": [_class_doc(c) for c in classes],
    }
    _emit(_dump(doc), args.output)
    return 0


def _cmd_weyl(args):
    G = build_group(args.group)
    classes = subgroups_up_to_conjugacy(G)
    cls = select_class(G, classes, args.h)
    w = weyl(G, cls, args.kind)
    doc = {
        "schema": "quillen-strata/weyl/1",
        "group": args.group,
        "subgroup": _class_doc(cls),
        "kind": w.kind,
        "order": w.order,
        "action_degree": w.quotient.degree,
        "quotient_generators": [q.cycle_string()
                                for q in minimal_generators(w.quotient)],
    }
    _emit(_dump(doc), args.output)
    return 0


def _cmd_double_cosets(args):
    G = build_group(args.group)
    classes = subgroups_up_to_conjugacy(G)
    hc = select_class(G, classes, args.h)
    kc = select_class(G, classes, args.k)
    dec = double_cosets(G, hc.elements, kc.elements)
    lhs = sum(dec.group_order // len(dc.intersection) for dc in dec.pairs)
    rhs = (dec.group_order // dec.h_order) * (dec.group_order // dec.k_order)
    doc = {
        "schema": "quillen-strata/double-cosets/1",
        "group": args.group,
        "h": {"order": hc.order, "index": hc.index},
        "k": {"order": kc.order, "index": kc.index},
        "double_cosets": [
            {"representative": dc.representative.cycle_string(),
             "intersection_order": len(dc.intersection),
             "size": dc.size}
            for dc in dec.pairs],
        "mackey": {"lhs": lhs, "rhs": rhs, "ok": lhs == rhs},
    }
    _emit(_dump(doc), args.output)
    return 0


def _cmd_spectrum(args):
    G = build_group(args.group)
    theory = parse_theory(args.theory, prime_bound=args.prime_bound,
                          degree_bound=args.degree_bound)
    if args.mode == "weak":
        space = assemble_weak(theory, G, args.group)
    else:
        space = assemble_strong(theory, G, args.group)
    _emit(serialize(space, args.format), args.output)
    return 0


def _cmd_strata(args):
    G = build_group(args.group)
    theory = parse_theory(args.theory, prime_bound=args.prime_bound,
                          degree_bound=args.degree_bound)
    members = theory_family_classes(theory, G)
    out = []
    for cls in members:
        model = stratum(theory, G, cls)
        entry = {
            "subgroup": {"order": cls.order, "index": cls.index},
            "weyl_kind": weyl_action_kind(theory, cls),
        }
        if model.is_empty():
            entry["empty"] = True
            entry["reason"] = model.reason
        else:
            entry["points"] = [
                {"local_id": pt.local_id, "label": pt.label,
                 "closed": pt.closed, "ring": pt.descriptor.ring,
                 "kind": pt.descriptor.kind}
                for pt in model.points]
            entry["internal_edges"] = [list(e) for e in model.internal_edges]
            entry["weyl_order"] = model.weyl.order
            entry["orbits"] = [list(o) for o in model.orbits()]
        out.append(entry)
    doc = {
        "schema": "quillen-strata/strata/1",
        "group": args.group,
        "theory": theory.name,
        "family": theory.family().name,
        "strata": out,
    }
    _emit(_dump(doc), args.output)
    return 0


def _cmd_coequalize(args):
    if args.input and args.input != "-":
        with open(args.input) as fh:
            doc = json.load(fh)
    else:
        doc = json.load(sys.stdin)
    try:
        objects = {obj["id"]: list(obj["points"]) for obj in doc["objects"]}
        maps = [(m["src"], m["dst"], dict(m["table"])) for m in doc["maps"]]
    except (KeyError, TypeError) as exc:
        raise CliParseError("bad diagram document: %s" % exc)
    result = coequalize_raw(objects, maps)
    out = {
        "schema": "quillen-strata/coequalizer/1",
        "classes": [
            {"id": "%s|%s" % cid, "members": [[o, p] for (o, p) in members]}
            for cid, members in result.classes],
    }
    _emit(_dump(out), args.output)
    return 0


def _cmd_drinfeld_check(args):
    p = args.p
    data = level_polynomial_P(p)
    q_cyclo = data.q_over_cyclo()
    p_div_q, quot1 = divides(data.P, q_cyclo)
    q_div_p, quot2 = divides(q_cyclo, data.P)
    quotient_is_one = p_div_q and q_div_p and quot1.is_one() and quot2.is_one()
    p_mod = reduce_cyclo_mod_p(data.P, p)
    doc = {
        "schema": "quillen-strata/drinfeld/1",
        "p": p,
        "P": data.P.pretty(),
        "Q": data.Q_poly.pretty(),
        "Q_coeffs": list(data.Q_poly.coeffs),
        "P_divides_Q": p_div_q,
        "Q_divides_P": q_div_p,
        "quotient_is_one": quotient_is_one,
        "separable_char0": is_separable(q_cyclo),
        "mod_p_image": p_mod.pretty(),
        "separable_mod_p": is_separable(p_mod),
    }
    _emit(_dump(doc), args.output)
    return 0


def _cmd_verify(args):
    results = checks.run_all()
    failed = [r for r in results if not r.ok]
    lines = []
    for r in results:
        lines.append("%-32s %s  %6.2fs  %s"
                     % (r.name, "ok  " if r.ok else "FAIL", r.seconds, r.detail))
    lines.append("%d/%d suites passed" % (len(results) - len(failed), len(results)))
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if not failed else 3


def make_parser():
    parser = _Parser(prog="quillen-strata",
                     description="Stratified prime spectra for finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, theory=False, bounds=False, selector=()):
        p.add_argument("--group", required=True, help="group DSL string")
        if theory:
            p.add_argument("--theory", required=True,
                           help="height1:p=P | ku | hz:p=P | modp:q=Q,deg=D | kr")
        if bounds:
            p.add_argument("--prime-bound", type=int, default=None,
                           help="truncation bound for infinite spectra (default 19)")
            p.add_argument("--degree-bound", type=int, default=None,
                           help="degree bound for homogeneous strata (default 1)")
        for name in selector:
            p.add_argument("--" + name, required=True,
                           help="subgroup selector: ORDER:INDEX, gens:<cycles>, or A<n>")
        p.add_argument("--output", "-o", default="-", help="output path (default stdout)")

    p = sub.add_parser("spectrum", help="assemble a stratified spectrum")
    add_common(p, theory=True, bounds=True)
    p.add_argument("--mode", choices=("strong", "weak"), default="strong")
    p.add_argument("--format", choices=("json", "dot", "table"), default="json")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("strata", help="per-subgroup strata with Weyl actions")
    add_common(p, theory=True, bounds=True)
    p.set_defaults(fn=_cmd_strata)

    p = sub.add_parser("subgroups", help="subgroup classes up to conjugacy")
    add_common(p)
    p.set_defaults(fn=_cmd_subgroups)

    p = sub.add_parser("weyl", help="Weyl group of a subgroup class")
    add_common(p, selector=("h",))
    p.add_argument("--kind", choices=("ordinary", "global", "quillen"),
                   default="ordinary")
    p.set_defaults(fn=_cmd_weyl)

    p = sub.add_parser("double-cosets", help="double coset decomposition H\\G/K")
    add_common(p, selector=("h", "k"))
    p.set_defaults(fn=_cmd_double_cosets)

    p = sub.add_parser("coequalize", help="colimit of an explicit point-set diagram")
    p.add_argument("--input", "-i", default="-", help="diagram JSON (default stdin)")
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(fn=_cmd_coequalize)

    p = sub.add_parser("drinfeld-check",
                       help="torsion polynomial vs p-series divisibility report")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(fn=_cmd_drinfeld_check)

    p = sub.add_parser("verify", help="run every invariant suite over the corpus")
    p.add_argument("--all", action="store_true", default=True,
                   help="run all suites (default)")
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(fn=_cmd_verify)
    return parser


def run(argv):
    threads = os.environ.get("QUILLEN_STRATA_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            _error_json("parse", "QUILLEN_STRATA_THREADS must be a positive integer")
            return 1
        # evaluation is sequential, which respects any positive cap
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except CliParseError as exc:
        _error_json("parse", str(exc))
        return 1
    try:
        return args.fn(args)
    except (GroupParseError, TheoryError, CliParseError, BoundExceeded) as exc:
        _error_json("parse", str(exc))
        return 1
    except (UnsupportedTheory, RingError, DiagramError, GroupError) as exc:
        _error_json("domain", str(exc))
        return 2


def _error_json(kind, message):
    sys.stderr.write(json.dumps(
        {"error": {"type": kind, "message": message}}, sort_keys=True) + "\n")


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
