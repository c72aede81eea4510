"""The rg command line tool.

One verb per library operation: genus/profile report invariants, dual,
pdual, contract and delete emit transformed graphs in .rg format, minor and
biseparation print certificates, bouquet exposes the interlacement pipeline,
characterize/obstructions/selftest drive the low-genus decision machinery,
enumerate lists equivalence classes and knot bridges diagram codes.

Output is deterministic: identical inputs and flags give byte-identical
output.  `--json` switches to JSON with sorted keys.  Exit status 0 on
success, 1 on a negative decision (no minor, no biseparation, not
representable, selftest failure), 2 on input errors including exceeded caps.
"""

import argparse
import json
import sys

from .core import RibbonGraphError, are_equivalent
from .io import ParseError, load, print_ribbon_graph
from .pdual import genus_profile, partial_dual
from .minors import CONTRACT_EDGE, DELETE_EDGE, has_minor, replay
from .biseparation import PLANE, RP2, find_biseparation
from .bouquet import find_obstruction_minor, intersection_graph, quotient_graph
from .characterize import (
    characterize_graph,
    obstruction_search,
    pinned_obstructions,
    verify_characterization,
)
from .enumeration import EnumerationSpec, bouquet_classes, enumerate_classes
from .knots import all_a_ribbon_graph, gauss_to_pd, parse_gauss, parse_pd, representable_in_rp3


def _dump(payload):
    return json.dumps(payload, sort_keys=True)


def _minor_cert_payload(cert, target_label):
    return {
        "steps": [[op, name] for op, name in cert.steps],
        "target": target_label,
    }


def _report_payload(report):
    return [
        {"edges": list(edges), "euler_genus": g} for edges, g in report
    ]


def _bisep_cert_payload(cert):
    return {
        "subset": sorted(cert.subset),
        "kind": cert.kind,
        "side_a": _report_payload(cert.side_a),
        "side_b": _report_payload(cert.side_b),
    }


def _edge_list(value):
    return [e.strip() for e in value.split(",") if e.strip()]


def _pinned_label(graph):
    for name, g in sorted(pinned_obstructions().items()):
        if are_equivalent(graph, g):
            return name
    return None


# -- verb handlers ---------------------------------------------------------


def cmd_genus(args):
    g = load(args.file)
    eg = g.euler_genus()
    if args.json:
        print(_dump({"euler_genus": eg}))
    else:
        print("euler_genus: %d" % eg)
    return 0


def cmd_profile(args):
    g = load(args.file)
    print(_dump(genus_profile(g, cap=args.brute_cap)))
    return 0


def _emit_graph(args, graph):
    text = print_ribbon_graph(graph)
    if args.json:
        print(_dump({"rg": text}))
    else:
        sys.stdout.write(text)
    return 0


def cmd_dual(args):
    g = load(args.file)
    return _emit_graph(args, partial_dual(g, frozenset(g.edges)))


def cmd_pdual(args):
    g = load(args.file)
    return _emit_graph(args, partial_dual(g, _edge_list(args.edges)))


def cmd_contract(args):
    g = load(args.file)
    steps = [(CONTRACT_EDGE, e) for e in _edge_list(args.edges)]
    return _emit_graph(args, replay(g, steps))


def cmd_delete(args):
    g = load(args.file)
    steps = [(DELETE_EDGE, e) for e in _edge_list(args.edges)]
    return _emit_graph(args, replay(g, steps))


def cmd_minor(args):
    g = load(args.file)
    pinned = pinned_obstructions()
    if args.target in pinned:
        target, label = pinned[args.target], args.target
    else:
        target, label = load(args.target), args.target
    cert = has_minor(g, target, cap=args.brute_cap)
    if cert is None:
        print("null" if args.json else "none")
        return 1
    if args.json:
        print(_dump(_minor_cert_payload(cert, label)))
    else:
        for op, name in cert.steps:
            print("%s %s" % (op, name))
        print("target: %s" % label)
    return 0


def cmd_biseparation(args):
    g = load(args.file)
    kind = {"plane": PLANE, "rp2": RP2}[args.kind]
    cert = find_biseparation(g, kind, cap=args.brute_cap)
    if cert is None:
        print("null" if args.json else "none")
        return 1
    if args.json:
        print(_dump(_bisep_cert_payload(cert)))
    else:
        print("kind: %s" % cert.kind)
        print("subset: %s" % " ".join(sorted(cert.subset)))
    return 0


def cmd_bouquet(args):
    g = load(args.file)
    if args.show == "certificate":
        cert = find_obstruction_minor(g, bisep_cap=args.brute_cap)
        label = _pinned_label(cert.target)
        if args.json:
            print(_dump(_minor_cert_payload(cert, label)))
        else:
            for op, name in cert.steps:
                print("%s %s" % (op, name))
            print("target: %s" % label)
        return 0
    ig = intersection_graph(g)
    if args.show == "quotient":
        dot = quotient_graph(ig).dot(name="quotient")
    else:
        dot = ig.dot()
    if args.json:
        print(_dump({"dot": dot}))
    else:
        sys.stdout.write(dot)
    return 0


def cmd_characterize(args):
    g = load(args.file)
    verdict, wit = characterize_graph(g, cap=args.brute_cap, minor_cap=args.brute_cap)
    if verdict:
        payload = {"admits_low_genus_partial_dual": True, "witness": {"A": wit["A"]}}
    else:
        payload = {
            "admits_low_genus_partial_dual": False,
            "witness": {
                "minor": _minor_cert_payload(wit["certificate"], wit["minor"])
            },
        }
    if args.json:
        print(_dump(payload))
    elif verdict:
        print("admits_low_genus_partial_dual: true")
        print("dual on: %s" % " ".join(wit["A"]))
    else:
        print("admits_low_genus_partial_dual: false")
        print("obstruction minor: %s" % wit["minor"])
    return 0 if verdict else 1


def cmd_enumerate(args):
    if args.bouquets:
        classes = list(bouquet_classes(args.edges, cap=args.edges))
    else:
        spec = EnumerationSpec(args.edges)
        classes = list(enumerate_classes(spec, cap=args.edges))
    if args.count:
        print(_dump({"count": len(classes)}) if args.json else "%d" % len(classes))
        return 0
    texts = [print_ribbon_graph(g) for g in classes]
    if args.json:
        print(_dump({"classes": texts}))
        return 0
    for i, text in enumerate(texts):
        print("# class %d of %d" % (i, len(texts)))
        sys.stdout.write(text)
    return 0


def cmd_obstructions(args):
    found = obstruction_search(args.max_edges, cap=max(args.max_edges, 4))
    if args.json:
        payload = [
            {
                "rg": print_ribbon_graph(o.graph),
                "edges": o.num_edges,
                "min_genus": o.min_genus,
            }
            for o in found
        ]
        print(_dump({"classes": payload}))
        return 0
    for i, o in enumerate(found):
        print("# obstruction %d: %d edges, min dual genus %d" % (i, o.num_edges, o.min_genus))
        sys.stdout.write(print_ribbon_graph(o.graph))
    return 0


def cmd_knot(args):
    if args.pd is not None:
        code = parse_pd(args.pd)
    else:
        code = gauss_to_pd(parse_gauss(args.gauss))
    g = all_a_ribbon_graph(code)
    ok, wit = representable_in_rp3(g, cap=args.brute_cap, minor_cap=args.brute_cap)
    if ok:
        if isinstance(wit, dict):
            witness = {"A": wit["A"]}
        else:
            witness = _bisep_cert_payload(wit)
    else:
        witness = {"minor": _minor_cert_payload(wit["certificate"], wit["minor"])}
    payload = {
        "ribbon_graph": print_ribbon_graph(g),
        "representable_in_rp3": ok,
        "witness": witness,
    }
    if args.json:
        print(_dump(payload))
    else:
        sys.stdout.write(payload["ribbon_graph"])
        print("representable_in_rp3: %s" % ("true" if ok else "false"))
    return 0 if ok else 1


def cmd_selftest(args):
    report = verify_characterization(
        args.max_edges, cap=args.brute_cap, minor_cap=args.brute_cap
    )
    passed = not report["disagreements"]
    if args.json:
        report = dict(report)
        report["pass"] = passed
        print(_dump(report))
    elif passed:
        print("PASS (checked %d classes up to %d edges)" % (report["checked"], args.max_edges))
    else:
        print("FAIL (%d disagreements out of %d classes)" % (
            len(report["disagreements"]), report["checked"]))
        for item in report["disagreements"]:
            print(item["verdicts"])
            sys.stdout.write(item["graph"])
    return 0 if passed else 1


# -- parser ------------------------------------------------------------------


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON with sorted keys")
    common.add_argument(
        "--brute-cap",
        type=int,
        default=16,
        metavar="N",
        help="edge cap for subset scans and minor searches (default 16)",
    )

    parser = argparse.ArgumentParser(
        prog="rg", description="ribbon graphs, partial duals, minors and certificates"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text, **kwargs):
        p = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        p.set_defaults(func=func)
        return p

    p = verb("genus", cmd_genus, "Euler genus of a graph")
    p.add_argument("file")

    p = verb("profile", cmd_profile, "partial-dual genus profile as JSON")
    p.add_argument("file")

    p = verb("dual", cmd_dual, "geometric dual")
    p.add_argument("file")

    p = verb("pdual", cmd_pdual, "partial dual over an edge subset")
    p.add_argument("file")
    p.add_argument("--edges", required=True, metavar="a,b,c", help="edges to dual over")

    p = verb("contract", cmd_contract, "contract edges")
    p.add_argument("file")
    p.add_argument("--edges", required=True, metavar="a,b,c")

    p = verb("delete", cmd_delete, "delete edges")
    p.add_argument("file")
    p.add_argument("--edges", required=True, metavar="a,b,c")

    p = verb("minor", cmd_minor, "search for a minor; exit 1 when absent")
    p.add_argument("file")
    p.add_argument("--target", required=True, help="X1, X2, X3 or a graph file")

    p = verb("biseparation", cmd_biseparation, "find a biseparation; exit 1 when absent")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=["plane", "rp2"])

    p = verb("bouquet", cmd_bouquet, "interlacement structure of a one-vertex graph")
    p.add_argument("file")
    p.add_argument(
        "--show",
        required=True,
        choices=["intersection", "quotient", "certificate"],
        help="dot graph or obstruction certificate",
    )

    p = verb("characterize", cmd_characterize,
             "decide a low-genus partial dual; exit 1 on a negative answer")
    p.add_argument("file")

    p = verb("enumerate", cmd_enumerate, "equivalence classes up to an edge count")
    p.add_argument("--edges", type=int, required=True, metavar="N")
    p.add_argument("--bouquets", action="store_true", help="one-vertex classes only")
    p.add_argument("--count", action="store_true", help="print only the count")

    p = verb("obstructions", cmd_obstructions, "minor-minimal high-genus classes")
    p.add_argument("--max-edges", type=int, default=3, metavar="N")

    p = verb("knot", cmd_knot, "state ribbon graph of a link code; exit 1 if not representable")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pd", metavar="CODE", help='crossings like "X(1,4,2,5) ..."')
    group.add_argument("--gauss", metavar="CODE", help='tokens like "O1+ U2- ..."')

    p = verb("selftest", cmd_selftest, "cross-check the three deciders; exit 1 on failure")
    p.add_argument("--max-edges", type=int, default=3, metavar="N")

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RibbonGraphError, ValueError) as exc:
        message = str(exc)
        if "cap" in message:
            message += " (flags: --brute-cap, --max-edges)"
        print("error: %s" % message, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
