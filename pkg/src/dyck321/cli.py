"""
Command-line front end.

Exit status: 0 on success, 1 on bad input, 2 when a verification suite
finds a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bijections as bij
from .codes import InvalidCodeError, code_of, format_code, lk_labels
from .dyck import DyckError, enumerate_dyck, parse_dyck, render_dyck, reverse
from .involutions import lk, lk_lk_prime, lk_prime, lk_prime_lk
from .pairs import InvalidPairError, format_pair, minimal_diagonals, phi, region_cells, vertices
from .perm321 import (NotAPermutationError, Not321AvoidingError, excedance_code, format_perm,
                      lrmax_code, parse_perm)
from .verify import CONVENTIONS, DEFAULT_MAX, SUITES, orbit

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

INPUT_ERRORS = (DyckError, InvalidCodeError, InvalidPairError, NotAPermutationError,
                Not321AvoidingError)

# op -> (function, input kind)
OPS = {
    "B": (bij.bijection_B, "path"),
    "K": (bij.bijection_K, "path"),
    "M": (bij.bijection_M, "path"),
    "Binv": (bij.bijection_B_inv, "perm"),
    "Kinv": (bij.bijection_K_inv, "perm"),
    "Minv": (bij.bijection_M_inv, "perm"),
    "L": (lk, "path"),
    "Lprime": (lk_prime, "path"),
    "LprimeL": (lk_prime_lk, "path"),
    "LLprime": (lk_lk_prime, "path"),
    "R": (reverse, "path"),
}


class InputError(Exception):
    pass


def _fmt(value) -> str:
    if isinstance(value, tuple):
        return format_perm(value)
    return str(value)


def _emit(args, text_lines, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj))
    else:
        for line in text_lines:
            print(line)


def _inputs(args, flag_value):
    """Items from the flag, the positional argument, or standard input (one per line)."""
    given = [v for v in (flag_value, getattr(args, "input", None)) if v is not None]
    if len(given) > 1:
        raise InputError("give the input either as a flag or positionally, not both")
    if given:
        return [given[0]]
    return [line.rstrip("\n") for line in sys.stdin]


def cmd_enumerate(args) -> int:
    paths = enumerate_dyck(args.size)
    for p in paths:
        if args.format == "json":
            print(json.dumps({"path": p.steps}))
        else:
            print(p.steps)
    return EXIT_OK


def cmd_map(args) -> int:
    func, kind = OPS[args.op]
    items = _inputs(args, args.path if kind == "path" else args.perm)
    for item in items:
        obj = parse_dyck(item) if kind == "path" else parse_perm(item)
        out = _fmt(func(obj))
        _emit(args, [out], {"op": args.op, "input": _fmt(obj), "output": out})
    return EXIT_OK


def cmd_codes(args) -> int:
    for item in _inputs(args, args.path):
        p = parse_dyck(item)
        if not p.steps:
            raise InputError("the empty path has no codes")
        code = code_of(p)
        b, k = bij.bijection_B(p), bij.bijection_K(p)
        rows = {
            "path": p.steps,
            "ascent_descent": format_code(code),
            "lk_labels": format_code(lk_labels(p)),
            "B": format_perm(b),
            "excedance_code_of_B": format_code(excedance_code(b)),
            "K": format_perm(k),
            "lrmax_code_of_K": format_code(lrmax_code(k)),
        }
        _emit(args, [f"{key}: {val}" for key, val in rows.items()], rows)
    return EXIT_OK


def render_pair(pair) -> str:
    """Enclosed cells as ``#``, highest row first; the size-1 pair draws as ``-``."""
    cells = region_cells(pair)
    if not cells:
        return "-"
    w = max(v[0] for v in vertices(pair.upper))
    h = max(v[1] for v in vertices(pair.upper))
    return "\n".join("".join("#" if (x, y) in cells else "." for x in range(w)).rstrip(".")
                     for y in reversed(range(h)))


def cmd_pairs(args) -> int:
    for item in _inputs(args, args.path):
        p = parse_dyck(item)
        pair = phi(p)
        diags = sorted(minimal_diagonals(pair)) if not pair.degenerate else []
        obj = {"path": p.steps, "pair": format_pair(pair),
               "diagonals": [[list(d.v1), list(d.v2)] for d in diags]}
        lines = [format_pair(pair), f"diagonals: {len(diags)}"]
        lines += [f"  {d.v1} -> {d.v2}" for d in diags]
        lines += [render_pair(pair), render_dyck(p, "ascii_art")]
        _emit(args, lines, obj)
    return EXIT_OK


def cmd_orbit(args) -> int:
    for item in _inputs(args, args.path):
        orb = orbit(parse_dyck(item), args.op)
        steps = [e.steps for e in orb.elements]
        _emit(args, [f"size: {len(orb)}"] + steps,
              {"op": args.op, "base": orb.base.steps, "size": len(orb), "elements": steps})
    return EXIT_OK


def cmd_render(args) -> int:
    for item in _inputs(args, args.path):
        print(render_dyck(parse_dyck(item), args.style))
    return EXIT_OK


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    kwargs = {"max_n": args.max_size if args.max_size is not None else DEFAULT_MAX[args.suite],
              "failure_limit": args.failure_limit, "workers": args.workers}
    if args.min_size is not None:
        kwargs["min_n"] = args.min_size
    if args.suite == "proposition":
        kwargs["convention"] = args.convention
    cap = 13 if args.suite in ("pairs", "theorem", "identities") else 12
    if not 0 <= kwargs["max_n"] <= cap:
        raise InputError(f"--max-size must lie in 0..{cap} for suite {args.suite}")
    report = suite(**kwargs)
    print(json.dumps(report.to_dict(), indent=None if args.format == "json" else 2))
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyck321",
        description="Dyck paths, 321-avoiding permutations and path pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("enumerate", cmd_enumerate, "list all Dyck paths of a size")
    p.add_argument("--size", type=int, required=True)

    p = add("map", cmd_map, "apply a bijection or involution")
    p.add_argument("--op", choices=sorted(OPS), required=True)
    p.add_argument("--path", help="Dyck path over U/D")
    p.add_argument("--perm", help="space-separated permutation")
    p.add_argument("input", nargs="?", help="path or permutation; default: one per stdin line")

    for name, func, help_ in (("codes", cmd_codes, "codes and labels of a path"),
                              ("pairs", cmd_pairs, "path pair of a Dyck path"),
                              ("orbit", cmd_orbit, "orbit of a path under a map"),
                              ("render", cmd_render, "draw a path")):
        p = add(name, func, help_)
        p.add_argument("--path")
        p.add_argument("input", nargs="?")
        if name == "orbit":
            p.add_argument("--op", choices=("LprimeL", "LLprime", "L", "Lprime", "R"),
                           default="LprimeL")
        if name == "render":
            p.add_argument("--style", choices=("letters", "ascii_art"), default="ascii_art")

    p = add("verify", cmd_verify, "run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-size", type=int)
    p.add_argument("--min-size", type=int)
    p.add_argument("--failure-limit", type=int, default=10)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--convention", choices=CONVENTIONS, default="clockwise")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
