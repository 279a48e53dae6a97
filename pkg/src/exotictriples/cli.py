"""Command-line interface.

Results go to stdout as a single JSON array (or CSV for triple listings);
diagnostics and stats go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import re
import sys
from collections import Counter

from .family import CSV_HEADER, ExoticTriple, first_n_triples
from .exactnum import format_rat, parse_rat
from .identities import run_all
from .search import case1_scan, search_integer_exotic, search_rational_exotic
from .theorem2 import gap_sweep
from .verify import regularity_report, verify_exotic

log = logging.getLogger("exotictriples")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _rational(text: str):
    try:
        return parse_rat(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def _nonnegative(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exotic-triples", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="first N triples of the E2 family")
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("verify", help="certify a candidate triple")
    # let "-3/7" parse as a positional rather than an option
    p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
    p.add_argument("a", type=_rational)
    p.add_argument("b", type=_rational)
    p.add_argument("c", type=_rational)

    p = sub.add_parser("search-int", help="exhaustive integer search (expected empty)")
    p.add_argument("--max-c", type=_positive, required=True)
    p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("search-rat", help="regular-extension rational search")
    p.add_argument("--height", type=_positive, required=True)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("case1-scan", help="rational points of the rs = ±1 branch")
    p.add_argument("--height", type=_positive, required=True)

    p = sub.add_parser("gap-sweep", help="check the M-gap on integer quadruples")
    p.add_argument("--max-c", type=_positive, required=True)
    p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("selftest", help="random-point identity suites")
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--seed", type=_nonnegative, default=0)
    return parser


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _emit_triples(triples: list[ExoticTriple], fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for t in triples:
            w.writerow(t.csv_row())
    else:
        _emit_json([t.to_json() for t in triples], out)


def _stats(label: str, **data) -> None:
    print(json.dumps({label: data}, default=str), file=sys.stderr)


def _cmd_generate(args, out) -> int:
    _emit_triples(first_n_triples(args.count), args.format, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    v = verify_exotic(args.a, args.b, args.c)
    record = {"a": format_rat(v.a), "b": format_rat(v.b), "c": format_rat(v.c)}
    if v.ok:
        record["certificate"] = v.certificate.to_json()
        record["provenance"] = None
    else:
        record["failures"] = list(v.failures)
        log.info("not exotic: %s", ", ".join(v.failures))
    _emit_json([record], out)
    return EXIT_OK if v.ok else EXIT_FAIL


def _cmd_search_int(args, out) -> int:
    outcome = search_integer_exotic(args.max_c, threads=args.threads)
    _stats("search-int", **outcome.stats, near_miss_list=outcome.near_misses,
           lemma_violations=outcome.lemma_violations)
    _emit_json([t.to_json() for t in outcome.exotic_found], out)
    return EXIT_FAIL if outcome.exotic_found else EXIT_OK


def _cmd_search_rat(args, out) -> int:
    triples = search_rational_exotic(args.height, threads=args.threads)
    split = Counter(regularity_report(*t.values).flag_quadruple_regular for t in triples)
    _stats("search-rat", found=len(triples), quadruple_regular=split[True],
           not_quadruple_regular=split[False])
    _emit_triples(triples, args.format, out)
    return EXIT_OK


def _cmd_case1(args, out) -> int:
    hits = case1_scan(args.height)
    _emit_json([{"s": format_rat(h.s), "r": format_rat(h.r), "c": format_rat(h.c),
                 "reason": h.reason} for h in hits], out)
    return EXIT_FAIL if any(h.reason is None for h in hits) else EXIT_OK


def _cmd_gap_sweep(args, out) -> int:
    sweep = gap_sweep(args.max_c, threads=args.threads)
    _stats("gap-sweep", checked=len(sweep.reports), below_bound=sweep.below_bound)
    _emit_json([r.to_json() for r in sweep.reports], out)
    return EXIT_OK if sweep.all_hold and not sweep.below_bound else EXIT_FAIL


def _cmd_selftest(args, out) -> int:
    results = run_all(args.trials, args.seed)
    _emit_json([r.to_json() for r in results], out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


COMMANDS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "search-int": _cmd_search_int,
    "search-rat": _cmd_search_rat,
    "case1-scan": _cmd_case1,
    "gap-sweep": _cmd_gap_sweep,
    "selftest": _cmd_selftest,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    return COMMANDS[args.command](args, out)


def main() -> None:
    sys.exit(run())
