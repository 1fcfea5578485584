"""Command-line surface: arrowing queries, number computation, verification.

Exit codes are a stable scripting contract: 0 pass/arrows, 1
counterexample/fail, 2 indeterminate, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .arrowing import (
    DeletionFamily,
    IndeterminateError,
    NotFoundWithinBoundError,
    arrows,
    critical_number,
    export_dimacs,
    ramsey_number,
    result_to_json,
)
from .coloring import RED, monochromatic_subgraph
from .containment import target_from_spec
from .formulas import closed_form_path_critical, known_ramsey
from .graphs import Graph6Error, SpecError, graph6_encode, parse_spec, realize
from .verify import SCHEMA_VERSION, check_names, run_verification

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="ramarrow",
        description="Arrowing search, Ramsey numbers, and deletion-critical Ramsey numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=None, help="node budget for the search")
        p.add_argument(
            "--deterministic",
            action="store_true",
            help="single-worker canonical-order search; counterexamples are lexicographically least",
        )
        p.add_argument(
            "--jobs",
            type=int,
            default=1,
            help="worker cap (the current engine is single-process; values above 1 are accepted "
            "and ignored, verdicts do not depend on it)",
        )
        p.add_argument("--json", action="store_true", help="print the report as JSON")

    p_arrows = sub.add_parser("arrows", help="decide host -> (red, blue)")
    p_arrows.add_argument("--host", required=True, help="host graph expression, e.g. 'K9\\P4'")
    p_arrows.add_argument("--red", required=True, help="red target expression")
    p_arrows.add_argument("--blue", required=True, help="blue target expression")
    p_arrows.add_argument("--emit-witness", metavar="PATH", help="write counterexample JSON here")
    p_arrows.add_argument("--dimacs", metavar="PATH", help="write the CNF encoding here")
    common(p_arrows)

    p_numbers = sub.add_parser("numbers", help="Ramsey number and critical number for a pair")
    p_numbers.add_argument("--red", required=True)
    p_numbers.add_argument("--blue", required=True)
    p_numbers.add_argument(
        "--family",
        choices=[f.value for f in DeletionFamily],
        default="path",
        help="deletion family for the critical number",
    )
    p_numbers.add_argument("--max-r", type=int, default=17, help="largest host to try")
    common(p_numbers)

    p_verify = sub.add_parser("verify-paper", help="run the reproduction suite")
    p_verify.add_argument("--level", choices=["quick", "full"], default="quick")
    p_verify.add_argument(
        "--only", help="comma-separated check names (default: all); known names: "
        + ", ".join(check_names())
    )
    p_verify.add_argument("--out", metavar="PATH", help="write the JSON summary here")
    common(p_verify)
    return parser


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)


def _cmd_arrows(args) -> int:
    host = realize(parse_spec(args.host))
    red = target_from_spec(parse_spec(args.red))
    blue = target_from_spec(parse_spec(args.blue))
    if args.dimacs:
        with open(args.dimacs, "w", encoding="utf-8") as fh:
            fh.write(export_dimacs(host, red, blue))
    result = arrows(
        host, red, blue, budget=args.budget, deterministic=args.deterministic
    )
    outputs = result_to_json(args.host, red, blue, result)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "arrows",
        "inputs": {
            "host": args.host,
            "red": args.red,
            "blue": args.blue,
            "budget": args.budget,
            "deterministic": args.deterministic,
        },
        "outputs": outputs,
        "provenance": "search",
        "stats": outputs["stats"],
    }
    if args.emit_witness and result.counterexample is not None:
        payload = {
            "host": args.host,
            "red": args.red,
            "blue": args.blue,
            "coloring": result.counterexample.edge_triples(),
            "red_graph6": graph6_encode(monochromatic_subgraph(result.counterexample, RED)),
        }
        with open(args.emit_witness, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    lines = [f"{args.host} -> ({args.red}, {args.blue}): {result.verdict}"]
    if result.counterexample is not None:
        lines.append(f"counterexample: {result.counterexample.edge_triples()}")
    lines.append(
        f"nodes={result.stats.nodes} mode={result.stats.propagation_mode} "
        f"runtime={result.stats.runtime_ms:.0f}ms"
    )
    _emit(report, args.json, lines)
    if result.verdict == "arrows":
        return EXIT_PASS
    if result.verdict == "counterexample":
        return EXIT_FAIL
    return EXIT_INDETERMINATE


def _cmd_numbers(args) -> int:
    red_spec = parse_spec(args.red)
    blue_spec = parse_spec(args.blue)
    red = target_from_spec(red_spec)
    blue = target_from_spec(blue_spec)
    family = DeletionFamily(args.family)

    t0 = time.perf_counter()
    r_search = ramsey_number(
        red, blue, max_r=args.max_r, budget=args.budget, deterministic=args.deterministic
    )
    r_catalog = known_ramsey(red_spec, blue_spec)
    crit_search = critical_number(
        red, blue, family, r_search, budget=args.budget, deterministic=args.deterministic
    )
    crit_closed = closed_form_path_critical(red_spec, blue_spec) if family is DeletionFamily.PATH else None

    mismatch = None
    if r_catalog is not None and r_catalog.value != r_search:
        mismatch = f"Ramsey number: search {r_search} vs catalog {r_catalog.value} ({r_catalog.source})"
    if crit_closed is not None and crit_closed.value != crit_search:
        mismatch = f"critical number: search {crit_search} vs closed form {crit_closed.value} ({crit_closed.source})"

    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "numbers",
        "inputs": {
            "red": args.red,
            "blue": args.blue,
            "family": family.value,
            "max_r": args.max_r,
        },
        "outputs": {
            "ramsey": {
                "value": r_search,
                "search": r_search,
                "catalog": r_catalog.value if r_catalog else None,
                "catalog_source": r_catalog.source if r_catalog else None,
                "provenance": "search+catalog" if r_catalog else "search",
            },
            "critical": {
                "value": crit_search,
                "search": crit_search,
                "closed_form": crit_closed.value if crit_closed else None,
                "closed_form_source": crit_closed.source if crit_closed else None,
                "family": family.value,
                "index_unit": family.index_unit,
                "provenance": "search+catalog" if crit_closed else "search",
            },
            "consistent": mismatch is None,
        },
        "provenance": "search",
        "stats": {"runtime_ms": round((time.perf_counter() - t0) * 1000.0, 1)},
    }
    lines = [
        f"R({args.red}, {args.blue}) = {r_search}"
        + (f"  [catalog {r_catalog.source}: {r_catalog.value}]" if r_catalog else "  [search only]"),
        f"critical({family.value}, indexed by {family.index_unit}) = {crit_search}"
        + (
            f"  [closed form {crit_closed.source}: {crit_closed.value}]"
            if crit_closed
            else "  [search only]"
        ),
    ]
    if mismatch:
        lines.append(f"PROVENANCE MISMATCH: {mismatch}")
    _emit(report, args.json, lines)
    return EXIT_PASS if mismatch is None else EXIT_FAIL


def _cmd_verify(args) -> int:
    only = set(args.only.split(",")) if args.only else None
    if only:
        unknown = only - set(check_names())
        if unknown:
            raise _UsageError(f"unknown check names: {', '.join(sorted(unknown))}")
    t0 = time.perf_counter()
    budget = args.budget if args.budget is not None else 10**8
    report = run_verification(level=args.level, only=only, budget=budget)
    report["runtime_ms"] = round((time.perf_counter() - t0) * 1000.0, 1)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    lines = []
    for check in report["checks"]:
        lines.append(f"[{check['status']:>5}] {check['name']} ({check['runtime_ms']:.0f}ms)")
        lines.append(f"        {check['detail']}")
    lines.append("suite: " + ("PASS" if report["passed"] else "FAIL"))
    _emit(report, args.json, lines)
    if any(c["status"] == "indeterminate" for c in report["checks"]):
        return EXIT_INDETERMINATE
    return EXIT_PASS if report["passed"] else EXIT_FAIL


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.jobs < 1:
            raise _UsageError("--jobs must be at least 1")
        if args.command == "arrows":
            return _cmd_arrows(args)
        if args.command == "numbers":
            return _cmd_numbers(args)
        return _cmd_verify(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SpecError, Graph6Error, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IndeterminateError as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except NotFoundWithinBoundError as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
