"""Command-line front end.

    crcodes construct --family I --q 2 --k 3 --c 2 --out code.json
    crcodes verify code.json
    crcodes reproduce [--json] [--budget tiny]

``verify`` exits 0 for a completely regular code matching every prediction,
1 for a code that is not completely regular, 2 on any mismatch and 3 when an
enumeration exceeds the budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .code import LinearCode, code_from_json, default_budget, dumps_code, extend_code
from .constructions import construction_I, construction_II, sporadic_code
from .errors import CRCodesError, TooLarge
from .report import Budgets, build_report, exit_code
from .reproduce import run_all

FAMILIES = ("I", "II", "sporadic1", "sporadic1x", "sporadic2", "sporadic3")
NAMED_BUDGETS = {"tiny": 1 << 8, "small": 1 << 16, "default": None}

EXIT_BUDGET = 3


def parse_budget(text: str | None) -> int | None:
    if text is None:
        return None
    text = text.strip().lower()
    if text in NAMED_BUDGETS:
        return NAMED_BUDGETS[text]
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base) ** int(exp)
    return int(text)


def build_code(family: str, q: int | None, k: int | None, c: int | None, extend: bool = False) -> LinearCode:
    if family in ("I", "II"):
        missing = [name for name, v in (("--q", q), ("--k", k), ("--c", c)) if v is None]
        if missing:
            raise SystemExit(f"family {family} needs {', '.join(missing)}")
        code = (construction_I if family == "I" else construction_II)(q, k, c)
    elif family.startswith("sporadic"):
        code = sporadic_code(family[len("sporadic"):])
    else:
        raise SystemExit(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return extend_code(code) if extend else code


def cmd_construct(args) -> int:
    try:
        code = build_code(args.family, args.q, args.k, args.c, args.extend)
    except CRCodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = dumps_code(code)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote [{code.n},{code.k}]_{code.q} code to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    doc = json.loads(Path(args.input).read_text())
    code = code_from_json(doc)
    try:
        report = build_report(code, Budgets.scaled(parse_budget(args.budget)), timing=args.timing)
    except TooLarge as exc:
        print(json.dumps({"schema": 1, "status": "BUDGET_EXCEEDED", "error": str(exc)}))
        return EXIT_BUDGET
    print(json.dumps(report, indent=2))
    return exit_code(report)


def cmd_reproduce(args) -> int:
    only = [int(x) for x in args.only.split(",")] if args.only else None
    budget = parse_budget(args.budget)
    rows = run_all(Budgets.scaled(budget), only)
    if args.json:
        print(json.dumps({"schema": 1, "budget": budget or default_budget(),
                          "rows": [r.to_json() for r in rows]}, indent=2))
    else:
        width = max(len(r.title) for r in rows)
        for r in rows:
            print(f"{r.ident:>2}  {r.title:<{width}}  {r.status:<15} {r.seconds:7.2f}s  {r.detail}")
    return 0 if all(r.status == "PASS" for r in rows) else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crcodes", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write its JSON document")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--extend", action="store_true", help="append an overall parity coordinate")
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a code JSON document and print a report")
    p.add_argument("input")
    p.add_argument("--budget", help="enumeration budget: integer, 2^N, or tiny/small/default")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="run every reproduction check")
    p.add_argument("--budget", help="enumeration budget: integer, 2^N, or tiny/small/default")
    p.add_argument("--json", action="store_true")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
