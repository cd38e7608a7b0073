# cli.py
"""Command-line front end: analyze, catalan, search."""
from __future__ import annotations
import argparse
import logging
import sys
from typing import List, Optional

from efountain.category import dump_category
from efountain.config import configure_logging, load_settings
from efountain.errors import FountainError, ParseError
from efountain.pipeline import ALL_IDEMPOTENTS, dispatch

log = logging.getLogger("efountain.cli")


def build_parser() -> argparse.ArgumentParser:
    settings = load_settings()
    parser = argparse.ArgumentParser(
        prog="efountain",
        description="Reduced E-Fountain semigroups, their categories and algebras",
    )
    parser.add_argument("--log-level", default=None, help=f"default {settings.log_level}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run every check on one structure file")
    p.add_argument("input")
    p.add_argument("--e-set", default=ALL_IDEMPOTENTS, help="E-set file, or all-idempotents")
    p.add_argument("--ring", default=settings.ring, help="int, rational or modN")
    p.add_argument("--second-ring", default=settings.second_ring, help="empty to disable")
    p.add_argument("--format", choices=["table", "transformations"], default=None)
    p.add_argument("--report", default=None, help="also write the report to this path")
    p.add_argument("--dump-category", default=None, help="write the category of the structure to this path")

    p = sub.add_parser("catalan", help="check the Catalan monoid CT_d")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ring", default=settings.ring)
    p.add_argument("--second-ring", default=settings.second_ring)
    p.add_argument("--report", default=None)

    p = sub.add_parser("search", help="enumerate small structures and check each one")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--ring", default=settings.ring)
    p.add_argument("--report", default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "log_level")}
    if args.command == "search":
        params["emit"] = print

    try:
        result = dispatch(args.command, params)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FountainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    report = result["report"]
    if args.command == "search":
        print(result["summary"].to_string(index=False))
    else:
        sys.stdout.write(report.render())
    if args.report:
        report.write(args.report)

    if args.command == "analyze" and args.dump_category:
        C = result["analysis"].category
        if C is None:
            print("no category: the congruence condition fails", file=sys.stderr)
            return 1
        with open(args.dump_category, "w") as fh:
            fh.write(dump_category(C))
    log.info("%s finished with %d failing checks", args.command, len(report.failures()))
    return report.exit_code()


if __name__ == "__main__":
    raise SystemExit(main())
