"""``semiprimary`` command-line entry point.

Exit codes: 0 success, 1 a theorem, example or certificate fact failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .classify import PREDICATES, classify_all
from .dsl import parse_delta, parse_ideal, parse_ring
from .errors import AlgebraError, ParseError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def class_report_schema():
    text = resources.files("semiprimary").joinpath("schema/class_report.schema.json").read_text()
    return json.loads(text)


def _emit(args, payload, table):
    """Print ``table`` or JSON; also write JSON where ``--json``/``--output`` ask."""
    text = json.dumps(payload, indent=2)
    print(text if args.format == "json" else table)
    for path in (args.output, args.json):
        if path:
            with open(path, "w") as fh:
                fh.write(text + "\n")


def _classify_payload(R, I, delta):
    return {"ring": R.spec, "ideal": I.to_spec(), "delta": delta.to_spec(),
            "members": I.member_names(),
            "reports": [r.to_dict() for r in classify_all(I, delta)]}


def cmd_classify(args):
    R = parse_ring(args.ring)
    I = parse_ideal(R, args.ideal)
    delta = parse_delta(R, args.delta)
    payload = _classify_payload(R, I, delta)
    rows = [f"ring {R.spec}   ideal {I.to_spec()} = {{{', '.join(payload['members'])}}}   "
            f"delta {delta.to_spec()}"]
    for r in payload["reports"]:
        w = "" if r["witness"] is None else f"  witness ({', '.join(r['witness'])})"
        rows.append(f"  {r['class']:<36}{str(r['verdict']).lower():<6}{w}")
    _emit(args, payload, "\n".join(rows))
    return EXIT_OK


def cmd_ideals(args):
    R = parse_ring(args.ring)
    ideals = R.ideals
    maximal = {I.mask for I in ideals.maximal}
    entries = []
    for idx, I in enumerate(ideals):
        entries.append({"index": idx, "ideal": I.to_spec(), "size": len(I),
                        "members": I.member_names(), "proper": I.is_proper(),
                        "maximal": I.mask in maximal, "radical": I.rad.to_spec()})
    rows = [f"{R.spec}: order {R.order}, {len(ideals)} ideals"
            + (", quasi-local" if ideals.is_quasi_local else "")]
    for e in entries:
        tag = " maximal" if e["maximal"] else ""
        rows.append(f"  [{e['index']}] {e['ideal']:<24} |I|={e['size']:<4} rad={e['radical']}{tag}")
    _emit(args, {"ring": R.spec, "order": R.order, "ideals": entries}, "\n".join(rows))
    return EXIT_OK


def cmd_verify(args):
    from .harness import Universe, run_suite, traceability_matrix
    from .harness.theorems import reports_to_json
    U = Universe.named(args.universe)
    ids = "all" if args.theorems == "all" else [t.strip() for t in args.theorems.split(",") if t]
    reports = run_suite(U, ids)
    table = traceability_matrix(reports)
    _emit(args, json.loads(reports_to_json(reports, U)), table)
    if args.matrix:
        with open(args.matrix, "w") as fh:
            fh.write(table + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_search(args):
    from .harness import Universe, search_separating
    U = Universe.named(args.universe)
    w = search_separating(args.a, args.b, U, lambda R: parse_delta(R, args.delta))
    payload = {"class_a": args.a, "class_b": args.b, "witness": None if w is None else w.to_dict()}
    if w is None:
        table = f"no instance is {args.a} but not {args.b} in the {U.name} universe"
    else:
        d = w.to_dict()
        table = (f"{d['ring']} (order {d['order']}): {d['ideal']} = {{{', '.join(d['members'])}}} "
                 f"is {args.a} but not {args.b}")
    _emit(args, payload, table)
    return EXIT_OK


def cmd_poly(args):
    from .polyring import certify_facts, certify_paper_example, facts_from_json
    if args.example:
        cert = certify_paper_example(args.example, args.order)
    else:
        raw = sys.stdin.read() if args.facts == "-" else open(args.facts).read()
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"fact list is not valid JSON: {exc.msg}", raw, exc.pos) from None
        example, variables, facts, p, order = facts_from_json(data)
        cert = certify_facts(example, variables, facts, p, order)
    rows = [f"{cert.example}: F_{cert.characteristic}[{','.join(cert.variables)}] ({cert.order})"]
    for f in cert.facts:
        rows.append(f"  {'ok  ' if f.passed else 'FAIL'} {f.description or f.kind}")
    rows.extend(f"  note: {n}" for n in cert.notes)
    args.format = args.format or "json"
    _emit(args, cert.to_dict(), "\n".join(rows))
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_examples(args):
    from .harness import EXAMPLE_IDS, verify_example
    ids = EXAMPLE_IDS if args.id == "all" else [args.id]
    reports = [verify_example(e) for e in ids]
    rows = []
    for r in reports:
        rows.append(f"{r.example}: {'PASS' if r.passed else 'FAIL'}")
        rows.extend(f"  {'ok  ' if v else 'FAIL'} {d}" for d, v in r.facts)
        rows.extend(f"  note: {n}" for n in r.notes)
    _emit(args, [r.to_dict() for r in reports], "\n".join(rows))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="semiprimary",
                                     description="Ideal classification over finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="table"):
        p.add_argument("--format", choices=("table", "json"), default=default_format)
        p.add_argument("--output", metavar="PATH", help="write the JSON result here")
        p.add_argument("--json", metavar="PATH", help="same as --output")
        return p

    p = common(sub.add_parser("classify", help="run every class predicate on one ideal"))
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--delta", default="rad")
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("ideals", help="list the ideal lattice of a ring"))
    p.add_argument("--ring", required=True)
    p.set_defaults(func=cmd_ideals)

    p = common(sub.add_parser("verify", help="run the theorem suite"))
    p.add_argument("--universe", default="default", choices=("default", "small"))
    p.add_argument("--theorems", default="all", help="'all' or a comma-separated id list")
    p.add_argument("--matrix", metavar="PATH", help="write the markdown traceability matrix")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("search", help="smallest ideal in class A but not class B"))
    p.add_argument("--a", required=True, choices=tuple(PREDICATES))
    p.add_argument("--b", required=True, choices=tuple(PREDICATES))
    p.add_argument("--universe", default="default", choices=("default", "small"))
    p.add_argument("--delta", default="rad")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("poly", help="certify polynomial membership facts")
    p.add_argument("--format", choices=("table", "json"), default=None)
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--facts", metavar="FILE", help="JSON fact list, '-' for stdin")
    src.add_argument("--example", choices=("sec2-quotient", "e4"))
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    p.set_defaults(func=cmd_poly)

    p = common(sub.add_parser("examples", help="replay the worked examples"))
    p.add_argument("--id", default="all")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AlgebraError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
