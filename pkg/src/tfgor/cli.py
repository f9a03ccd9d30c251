"""Command-line front end.

Subcommands: check (classify one graph), survey (classify a graph6
corpus), family (emit a generated family member), homology (print Betti
numbers and the reduced Euler characteristic).  Exit codes: 0 no
counterexamples, 1 counterexample found, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._version import __version__
from .complexes import independence_complex, parse_facets, reduced_euler_characteristic
from .graphs import generate, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .homology import FieldSpec, reduced_betti
from .survey import (
    FIELD_CHOICES,
    FILTERS,
    build_record,
    report_to_csv,
    report_to_json,
    survey,
)


def _add_field_option(parser, repeatable=True):
    kwargs = dict(
        choices=FIELD_CHOICES,
        help="coefficient field (q = rationals, f2/f3/f5 = prime fields)",
    )
    if repeatable:
        parser.add_argument(
            "--field", action="append", dest="fields", metavar="FIELD", **kwargs
        )
    else:
        parser.add_argument("--field", default="q", metavar="FIELD", **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tfgor",
        description=(
            "Exact decision procedures for well-covered, W2, Cohen-Macaulay "
            "and Gorenstein graphs, with exhaustive corpus verification."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="classify a single graph")
    src = p_check.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", metavar="STRING", help="graph6-encoded graph")
    src.add_argument(
        "--edge-file", metavar="PATH", help="edge-list file ('n m' header)"
    )
    _add_field_option(p_check)

    p_survey = sub.add_parser("survey", help="classify a graph6 corpus")
    p_survey.add_argument(
        "--corpus", metavar="PATH", default="-",
        help="graph6 lines, one per graph ('-' = stdin)",
    )
    p_survey.add_argument(
        "--filter", metavar="LIST", default="",
        help="comma list of filters: " + ",".join(sorted(FILTERS)),
    )
    p_survey.add_argument("--max-n", type=int, metavar="INT")
    _add_field_option(p_survey)
    p_survey.add_argument("--jobs", type=int, default=1, metavar="INT")
    p_survey.add_argument("--out", metavar="PATH", help="report path (default stdout)")
    p_survey.add_argument("--format", choices=("json", "csv"), default="json")
    p_survey.add_argument(
        "--strict", action="store_true",
        help="abort on the first malformed corpus line",
    )

    p_family = sub.add_parser("family", help="emit a generated family member")
    p_family.add_argument(
        "name", choices=("path", "cycle", "complete", "girth4-planar")
    )
    p_family.add_argument("n", type=int)
    p_family.add_argument("--format", choices=("graph6", "edges"), default="graph6")

    p_hom = sub.add_parser(
        "homology", help="print Betti numbers and the Euler characteristic"
    )
    src = p_hom.add_mutually_exclusive_group(required=True)
    src.add_argument("--facets", metavar="PATH", help="facet-list file")
    src.add_argument("--g6", metavar="STRING", help="graph6 graph (independence complex)")
    src.add_argument("--edge-file", metavar="PATH", help="edge-list file (independence complex)")
    _add_field_option(p_hom, repeatable=False)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(args):
    if getattr(args, "g6", None) is not None:
        return parse_graph6(args.g6)
    return parse_edge_list(_read(args.edge_file))


def _cmd_check(args) -> int:
    fields = tuple(args.fields or ["q"])
    try:
        g = _load_graph(args)
    except (ValueError, OSError) as exc:
        print(f"tfgor check: {exc}", file=sys.stderr)
        return 2
    g6 = args.g6.strip() if args.g6 is not None else write_graph6(g)
    record = build_record(0, g, fields, graph6=g6)
    print(json.dumps(record, indent=2))
    return 0 if record["consistent"] else 1


def _cmd_survey(args) -> int:
    fields = tuple(args.fields or ["q"])
    filters = tuple(t for t in args.filter.split(",") if t)
    for t in filters:
        if t not in FILTERS:
            print(f"tfgor survey: unknown filter {t!r}", file=sys.stderr)
            return 2
    try:
        if args.corpus == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.corpus, "r", encoding="ascii") as fh:
                lines = fh.read().splitlines()
    except OSError as exc:
        print(f"tfgor survey: {exc}", file=sys.stderr)
        return 2
    try:
        report, skipped = survey(
            lines,
            filters=filters,
            fields=fields,
            max_n=args.max_n,
            jobs=args.jobs,
            strict=args.strict,
        )
    except ValueError as exc:
        print(f"tfgor survey: {exc}", file=sys.stderr)
        return 2
    for lineno, msg in skipped:
        print(f"tfgor survey: skipped line {lineno}: {msg}", file=sys.stderr)
    text = report_to_json(report) if args.format == "json" else report_to_csv(report)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report["counterexamples"] else 0


def _cmd_family(args) -> int:
    try:
        g = generate(args.name, args.n)
    except ValueError as exc:
        print(f"tfgor family: {exc}", file=sys.stderr)
        return 2
    if args.format == "graph6":
        print(write_graph6(g))
    else:
        sys.stdout.write(write_edge_list(g))
    return 0


def _cmd_homology(args) -> int:
    field = FieldSpec.from_label(args.field)
    try:
        if args.facets is not None:
            complex_ = parse_facets(_read(args.facets))
        else:
            complex_ = independence_complex(_load_graph(args))
    except (ValueError, OSError) as exc:
        print(f"tfgor homology: {exc}", file=sys.stderr)
        return 2
    print(f"field: {field.label}")
    betti = reduced_betti(complex_, field)
    for i in sorted(betti):
        print(f"H~_{i} = {betti[i]}")
    print(f"chi~ = {reduced_euler_characteristic(complex_)}")
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "survey": _cmd_survey,
    "family": _cmd_family,
    "homology": _cmd_homology,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args)


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
