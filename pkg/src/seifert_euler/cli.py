"""
Command-line entry point.

Exit codes: 0 success, 1 content mismatch, 2 input error, 3 I/O error.
"""
import argparse
import json
import sys
import time

from .applications.census import (
    FILTERS, CensusBounds, enumerate_census, oracle_sweep, write_csv, write_jsonl,
)
from .applications.report import analysis_report, trefoil_report
from .applications.tables import (
    diff_against, euclidean_table, render_csv, render_text, spherical_table,
)
from .applications.trefoil import SurgerySlope
from .invariants import parse_descriptor

OK, MISMATCH, INPUT_ERROR, IO_ERROR = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(INPUT_ERROR)


def _bounds_args(p, max_n=3, max_cone_order=5, b_min=-3, b_max=3, genus_max=0):
    p.add_argument("--max-n", type=int, default=max_n)
    p.add_argument("--max-cone-order", type=int, default=max_cone_order)
    p.add_argument("--b-min", type=int, default=b_min)
    p.add_argument("--b-max", type=int, default=b_max)
    p.add_argument("--genus-max", type=int, default=genus_max)


def _bounds(args):
    return CensusBounds(args.max_n, args.max_cone_order, args.b_min, args.b_max,
                        0, args.genus_max)


def build_parser():
    parser = _Parser(prog="seifert-euler",
                     description="Euler class of the normal bundle to Seifert fibrations")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="full report for one manifold")
    p.add_argument("descriptor", help='compact "g;b;a1/b1,..." or JSON')

    p = sub.add_parser("census", help="enumerate normalized invariants within bounds")
    _bounds_args(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--filter", choices=sorted(FILTERS))
    p.add_argument("--out", help="output path (default: standard output)")

    p = sub.add_parser("trefoil", help="classify p/q surgery on the trefoil")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("tables", help="regenerate the spherical/Euclidean tables")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--golden-dir", help="directory holding spherical.txt / euclidean.txt")

    p = sub.add_parser("oracle-check", help="closed form vs cohomology oracle sweep")
    _bounds_args(p, max_n=5, max_cone_order=12, b_min=-6, b_max=6, genus_max=2)
    return parser


def _emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_analyze(args):
    try:
        inv = parse_descriptor(args.descriptor)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    report = analysis_report(inv, args.descriptor)
    _emit(report)
    return OK if report["agree"] else MISMATCH


def cmd_census(args):
    try:
        bounds = _bounds(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    records = enumerate_census(bounds, FILTERS.get(args.filter))
    writer = write_csv if args.format == "csv" else write_jsonl
    if args.out is None:
        writer(records, sys.stdout)
        return OK
    try:
        with open(args.out, "w", newline="") as fh:
            writer(records, fh)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return IO_ERROR
    return OK


def cmd_trefoil(args):
    try:
        slope = SurgerySlope(args.p, args.q)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    report = trefoil_report(slope)
    _emit(report)
    return OK if report["agrees"] else MISMATCH


def cmd_tables(args):
    status = OK
    for name, rows, with_chi in (("spherical", spherical_table(), True),
                                 ("euclidean", euclidean_table(), False)):
        text = render_text(rows, with_chi)
        golden = None
        if args.golden_dir:
            try:
                with open(f"{args.golden_dir}/{name}.txt") as fh:
                    golden = fh.read()
            except OSError as exc:
                print(f"error: cannot read golden {name}.txt: {exc.strerror}", file=sys.stderr)
                return IO_ERROR
        diff = diff_against(name, text, golden)
        if diff:
            status = MISMATCH
            sys.stdout.write(diff)
        else:
            sys.stdout.write(render_csv(rows, with_chi) if args.format == "csv" else text)
        print()
    return status


def cmd_oracle_check(args):
    try:
        bounds = _bounds(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    start = time.perf_counter()
    result = oracle_sweep(bounds)
    _emit({
        "instances": result.instances,
        "vanishing": result.vanishing,
        "disagreements": [list(map(str, d)) for d in result.disagreements],
        "witness_mismatches": [list(map(str, d)) for d in result.witness_mismatches],
        "seconds": round(time.perf_counter() - start, 3),
        "ok": result.ok,
    })
    return OK if result.ok else MISMATCH


COMMANDS = {"analyze": cmd_analyze, "census": cmd_census, "trefoil": cmd_trefoil,
            "tables": cmd_tables, "oracle-check": cmd_oracle_check}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors (2) and --help (0)
        return exc.code
    try:
        return COMMANDS[args.command](args)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); not an error of ours
        sys.stderr.close()
        return OK


if __name__ == "__main__":
    sys.exit(main())
