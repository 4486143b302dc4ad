"""Command-line entry point.

    unital <command> --in <file> [--nerve <file>] [--json|--text]
           [--max-states N] [--against idA|idker] [--check-acyclic]

Exit codes: 0 all checks pass, 1 a check failed (the report carries the
witness), 2 bad input, 3 a state cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import CapExceeded, FinitenessError
from .reporting import COMMANDS, run
from .specfile import SpecError, parse_spec, _parse_cover


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="unital",
        description="exact computations with units of Picard groupoids, "
                    "2-groupoids, and their nonabelian relatives")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--in", dest="infile", required=True,
                        help="input JSON file")
    parser.add_argument("--nerve", dest="nervefile",
                        help="JSON cover description overriding the input's")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report")
    fmt.add_argument("--text", action="store_true",
                     help="plain-text report (default)")
    parser.add_argument("--max-states", type=int, default=10 ** 7,
                        help="cap on exhaustive-search states")
    parser.add_argument("--against", choices=("idA", "idker"),
                        help="which comparison model qiso should check")
    parser.add_argument("--check-acyclic", action="store_true",
                        help="unit-complex: assert all homology vanishes")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        with open(args.infile, encoding="utf-8") as fh:
            spec = parse_spec(fh.read())
        cover = None
        if args.nervefile:
            with open(args.nervefile, encoding="utf-8") as fh:
                cover = _parse_cover(json.load(fh), "nerve")
        report = run(args.command, spec, cover=cover,
                     max_states=args.max_states, against=args.against,
                     check_acyclic=args.check_acyclic)
    except (SpecError, FinitenessError, OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
