"""``sepnom`` command line: orbit counts, runs, reachability tables, property suites."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .automata import (
    SeparationError,
    extend_language,
    reachable_orbits,
    restrict,
    run,
    run_separated,
)
from .examples import AUTOMATA, BOT
from .nominal import (
    MembershipError,
    dimension,
    orbits,
    render,
    representative,
    shape_id,
    shape_json,
    to_json,
)
from .suites import SUITES, bell_bruteforce, run_suite
from .syntax import ParseError, parse_set, parse_word

MODES = ("nominal", "separated")


class CliError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _automaton(name, n):
    if name not in AUTOMATA:
        raise CliError(f"unknown automaton {name!r}; known: {', '.join(sorted(AUTOMATA))}")
    return AUTOMATA[name](n)


def cmd_orbits(expr: str) -> dict:
    try:
        X = parse_set(expr)
    except ParseError as exc:
        raise CliError(str(exc)) from exc
    shapes = orbits(X)
    return {
        "set": expr,
        "orbit_count": len(shapes),
        "dimension": dimension(X),
        "orbits": [shape_json(s) for s in shapes],
    }


def _is_sink(s) -> bool:
    return representative(s) == BOT


def cmd_reach(name: str, n: int, mode: str) -> dict:
    if mode not in MODES:
        raise CliError(f"unknown mode {mode!r}")
    A = _automaton(name, n)
    if mode == "separated":
        A = restrict(A)
    shapes = reachable_orbits(A)
    report = {
        "n": n,
        "mode": mode,
        "orbit_count": len(shapes),
        "orbits": [shape_id(s) for s in shapes],
    }
    if name == "fifo":
        report["sink_free_count"] = sum(1 for s in shapes if not _is_sink(s))
    return report


def cmd_run(name: str, n: int, word: str, mode: str) -> dict:
    A = _automaton(name, n)
    try:
        w = parse_word(word)
    except ParseError as exc:
        raise CliError(str(exc)) from exc
    try:
        if mode == "nominal":
            out = run(A, w)
        elif mode == "separated":
            out = run_separated(restrict(A), w)
        elif mode == "extended":
            out = extend_language(restrict(A), w)
        else:
            raise CliError(f"unknown mode {mode!r}")
    except SeparationError as exc:
        raise CliError(str(exc)) from exc
    except MembershipError as exc:
        raise CliError(str(exc)) from exc
    return {
        "automaton": name,
        "n": n,
        "mode": mode,
        "word": word,
        "output": to_json(out),
        "rendered": render(out),
    }


def cmd_verify(suite: str, seed: int, samples: int) -> dict:
    if suite != "all" and suite not in SUITES:
        raise CliError(f"unknown suite {suite!r}; choose from {', '.join([*SUITES, 'all'])}")
    return run_suite(suite, seed, samples)


def _parse_range(text: str) -> range:
    sep = ".." if ".." in text else "-"
    lo, _, hi = text.partition(sep)
    try:
        return range(int(lo), int(hi or lo) + 1)
    except ValueError as exc:
        raise CliError(f"bad range {text!r}; use e.g. 1..5") from exc


def cmd_table(name: str, ns: range) -> list[dict]:
    rows = []
    for n in ns:
        nom = cmd_reach(name, n, "nominal")
        sep = cmd_reach(name, n, "separated")
        row = {"n": n, "nominal": nom["orbit_count"], "separated": sep["orbit_count"]}
        if name == "fifo":
            row["separated_without_sink"] = sep["sink_free_count"]
            row["bell_oracle"] = 1 + sum(bell_bruteforce(k) for k in range(n + 1))
        rows.append(row)
    return rows


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["n"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sepnom", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("orbits", help="enumerate the orbits of a set expression")
    o.add_argument("expr")

    r = sub.add_parser("run", help="run a registered automaton on a word")
    r.add_argument("name")
    r.add_argument("--n", type=int, default=3)
    r.add_argument("--word", default="")
    r.add_argument("--mode", default="nominal", choices=["nominal", "separated", "extended"])

    re_ = sub.add_parser("reach", help="count reachable state orbits")
    re_.add_argument("name")
    re_.add_argument("--n", type=int, default=3)
    re_.add_argument("--mode", default="nominal", choices=MODES)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("suite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=500)

    t = sub.add_parser("table", help="nominal vs separated orbit counts over a range of n")
    t.add_argument("name")
    t.add_argument("--n-range", default="1..5")
    t.add_argument("--format", default="json", choices=["json", "csv"])
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "orbits":
            print(_dump(cmd_orbits(args.expr)))
        elif args.command == "run":
            print(_dump(cmd_run(args.name, args.n, args.word, args.mode)))
        elif args.command == "reach":
            print(_dump(cmd_reach(args.name, args.n, args.mode)))
        elif args.command == "verify":
            report = cmd_verify(args.suite, args.seed, args.samples)
            print(_dump(report))
            return 0 if report["ok"] else 1
        elif args.command == "table":
            rows = cmd_table(args.name, _parse_range(args.n_range))
            print(_csv(rows) if args.format == "csv" else _dump(rows))
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0
