"""Command-line front end: truth tables, expression evaluation, scenario runs.

Exit codes: ``eval`` maps the three-valued result to 0 (complete),
1 (failing), 2 (running) so shells can branch on it; ``run`` exits 0 only
on goal-reached; malformed input, unbound names, and unknown scenarios
exit 64. Traces stream to stdout, diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import sim
from .dsl import SourceError, evaluate, parse
from .sim import Interference, UnknownMutation, UnknownScenario
from .status import (
    COMPLETE,
    FAILING,
    RUNNING,
    UNARY_OPS,
    conj,
    disj,
    disregard,
    lenient,
    parse_status,
    strict,
)

EX_USAGE = 64

_STATUSES = (FAILING, RUNNING, COMPLETE)


def _binary_table(title: str, fn) -> str:
    lines = [title, "   | F U T"]
    for x in _STATUSES:
        cells = " ".join(fn(x, y).letter for y in _STATUSES)
        lines.append(f" {x.letter} | {cells}")
    return "\n".join(lines)


def _unary_table() -> str:
    ops = [("!x", "negate"), ("+x", "promote"), ("-x", "demote"), ("~x", "condone")]
    lines = ["unary decorators", "   | " + " ".join(h for h, _ in ops)]
    for x in _STATUSES:
        cells = " ".join(f"{UNARY_OPS[name](x).letter:>2}" for _, name in ops)
        lines.append(f" {x.letter} | {cells}")
    return "\n".join(lines)


def cmd_tables(out) -> int:
    tables = [
        ("x && y  (sequence)", conj),
        ("x || y  (selector)", disj),
        ("x + y  (lenient)", lenient),
        ("x * y  (strict)", strict),
        ("x % y  (disregard)", disregard),
    ]
    print("\n\n".join([_binary_table(t, fn) for t, fn in tables] + [_unary_table()]), file=out)
    return 0


def _parse_bindings(pairs) -> dict:
    bindings = {}
    for pair in pairs or ():
        name, eq, raw = pair.partition("=")
        if not eq or not name:
            raise ValueError(f"bad binding {pair!r}, expected name=F|U|T|true|false")
        try:
            bindings[name] = parse_status(raw)
        except ValueError:
            raise ValueError(f"bad binding value {raw!r} for {name!r}") from None
    return bindings


def cmd_eval(source: str, bindings: dict, out, err) -> int:
    try:
        status = evaluate(parse(source), bindings)
    except SourceError as exc:
        print(f"error: {exc}", file=err)
        return EX_USAGE
    print(status.letter, file=out)
    return {1: 0, -1: 1, 0: 2}[status.rank]


def _parse_interference(specs) -> list[Interference]:
    out = []
    for spec in specs or ():
        tick_text, sep, name = spec.partition(":")
        if not sep or not name or not tick_text.isdigit():
            raise ValueError(f"bad interference {spec!r}, expected TICK:MUTATION")
        out.append(Interference(int(tick_text), name))
    return out


def cmd_run(scenario_name, max_ticks, trace_format, interference, out, err) -> int:
    try:
        scenario = sim.build_scenario(scenario_name)
        emit = (
            (lambda e: print(e.to_text(), file=out))
            if trace_format == "text"
            else (lambda e: print(e.to_json(), file=out))
        )
        result = sim.run(scenario, max_ticks, interference, on_event=emit)
    except (UnknownScenario, UnknownMutation) as exc:
        print(f"error: {exc}", file=err)
        return EX_USAGE
    print(result.outcome.summary(), file=out)
    return 0 if result.outcome.kind == sim.GOAL_REACHED else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="btlogic",
        description="Three-valued behavior-tree logic: tables, evaluation, simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("tables", help="print the operator truth tables")

    p_eval = sub.add_parser("eval", help="evaluate a status expression")
    p_eval.add_argument("expr", nargs="?", help="expression text")
    p_eval.add_argument("--file", help="read the expression from a file")
    p_eval.add_argument(
        "--bind",
        action="append",
        metavar="NAME=VALUE",
        help="bind an identifier to F|U|T|true|false (repeatable)",
    )

    p_run = sub.add_parser("run", help="simulate a scenario, streaming its trace")
    p_run.add_argument("scenario", help="scenario name")
    p_run.add_argument("--max-ticks", type=int, default=200)
    p_run.add_argument("--trace-format", choices=("text", "jsonl"), default="text")
    p_run.add_argument(
        "--interfere",
        action="append",
        metavar="TICK:MUTATION",
        help="apply a named world edit at a tick (repeatable)",
    )
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    args = _build_parser().parse_args(argv)

    if args.command == "tables":
        return cmd_tables(out)

    if args.command == "eval":
        if args.expr is None and args.file is None:
            print("error: eval needs an expression or --file", file=err)
            return EX_USAGE
        try:
            source = args.expr
            if source is None:
                with open(args.file, encoding="utf-8") as fh:
                    source = fh.read()
            bindings = _parse_bindings(args.bind)
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=err)
            return EX_USAGE
        return cmd_eval(source, bindings, out, err)

    try:
        interference = _parse_interference(args.interfere)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EX_USAGE
    return cmd_run(args.scenario, args.max_ticks, args.trace_format, interference, out, err)


if __name__ == "__main__":
    sys.exit(main())
