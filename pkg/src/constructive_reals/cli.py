"""Command-line front end.

Commands: ``approx``, ``specker``, ``member``, ``bisect``, ``capture``.
Every command is deterministic given its flags and config file.

Exit codes: 0 success, 2 parse/config error, 3 domain error, 4 a resource
verdict (stalled bisection, or only ``Unknown`` results under ``--strict``).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

from .bisection import bisect, parse_oracle
from .errors import (EnumerationExhausted, InvalidWitness, NoInitialGap, OutOfInterval,
                     ParseError, StepStalled)
from .expr import parse_real
from .machine import decode, encode, halts_within, parse_program
from .rational import format_rational, parse_rational
from .search import Accept, capture_sequence
from .specker import IntervalSpec, SpeckerSeq, SpeckerSets

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 2, 3, 4


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    index_bound: int = 64
    budget: int = 10_000
    fuel: int = 1000
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(1)
    trace_out: str | None = None
    staged: tuple = ()

    def validate(self) -> "RunConfig":
        if not self.a < self.b:
            raise ConfigError(f"need a < b, got a={self.a}, b={self.b}")
        for name in ("index_bound", "budget", "fuel"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        return self

    def specker(self) -> SpeckerSeq:
        return SpeckerSeq(IntervalSpec(self.a, self.b), self.index_bound, self.budget,
                          self.staged)


def _to_rational(v) -> Fraction:
    if isinstance(v, str):
        return parse_rational(v)
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    raise ConfigError(f"expected a rational as 'p/q' or an integer, got {v!r}")


def _staged_entry(v):
    if isinstance(v, int) and not isinstance(v, bool) and v >= 0:
        return v
    if isinstance(v, str):
        return parse_program(v)
    raise ConfigError(f"staged entries are program numbers or program text, got {v!r}")


def load_config(path: str | None) -> RunConfig:
    if path is None:
        return RunConfig()
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    kw = {}
    for key, v in raw.items():
        if key in ("a", "b"):
            kw[key] = _to_rational(v)
        elif key == "staged":
            kw[key] = tuple(_staged_entry(e) for e in v)
        elif key == "trace_out":
            kw[key] = v
        else:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ConfigError(f"{key} must be an integer")
            kw[key] = v
    return RunConfig(**kw)


def decimal_string(x: Fraction, digits: int = 40) -> str:
    """Display-only decimal rounding of an exact rational (ties to even)."""
    scaled = round(abs(x) * 10 ** digits)
    whole, frac = divmod(scaled, 10 ** digits)
    sign = "-" if x < 0 and scaled else ""
    return f"{sign}{whole}.{frac:0{digits}d}"


def cmd_approx(args, cfg: RunConfig, out) -> int:
    x = parse_real(args.expr)
    r = x.approx(args.k)
    print(format_rational(r), file=out)
    print(decimal_string(r), file=out)
    return EXIT_OK


def cmd_specker(args, cfg: RunConfig, out) -> int:
    seq = cfg.specker()
    h = seq.h
    print(f"interval [{format_rational(cfg.a)}, {format_rational(cfg.b)}] "
          f"index_bound={cfg.index_bound} budget={cfg.budget} staged={len(cfg.staged)}",
          file=out)
    print("h: " + " ".join(str(v) for v in h), file=out)
    if args.n >= len(h):
        raise EnumerationExhausted(args.n + 1, len(h))
    for n in range(args.n + 1):
        s = seq.term(n)
        print(f"s_{n} = {format_rational(s)}  ({decimal_string(s)})  h={h[n]}", file=out)
    return EXIT_OK


def cmd_member(args, cfg: RunConfig, out) -> int:
    sets = SpeckerSets(cfg.specker())
    unknown_only = True
    for text in args.x:
        x = parse_rational(text)
        rep = sets.disjointness_check(x, cfg.fuel)
        if args.json:
            print(rep.to_json(), file=out)
        if args.set == "A":
            o = rep.outcome_A
            if isinstance(o, Accept):
                unknown_only = False
                s = sets.seq.term(o.witness)
                verdict = (f"Accept({o.witness})  [x < s_{o.witness} = {format_rational(s)}]")
            else:
                verdict = "Unknown"
        else:
            verdict = rep.b_verdict()
            if isinstance(rep.outcome_B, Accept):
                unknown_only = False
                s = sets.seq.term(rep.outcome_B.witness)
                verdict += f"  [x < s_{rep.outcome_B.witness} = {format_rational(s)}]"
            else:
                tested = min(cfg.fuel, len(sets.seq))
                verdict += f"  [in B_n for all {tested} known n < fuel]"
        if not args.json:
            print(f"{args.set}({text}) fuel={cfg.fuel}: {verdict}", file=out)
    if args.strict and unknown_only:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_bisect(args, cfg: RunConfig, out) -> int:
    try:
        f = parse_oracle(args.oracle)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    p, q = parse_rational(args.p), parse_rational(args.q)
    if not p < q:
        raise ParseError(f"bisect needs p < q, got {args.p} {args.q}")
    try:
        trace = bisect(f, p, q, gap_fuel=cfg.fuel, depth=args.depth)
    except StepStalled as exc:
        _write_trace(exc.trace, cfg.trace_out)
        raise
    _write_trace(trace, cfg.trace_out)
    lo, hi = trace.final
    print(f"steps: {len(trace.steps)}", file=out)
    print(f"final interval: [{format_rational(lo)}, {format_rational(hi)}]", file=out)
    print(f"width: {format_rational(trace.width)}", file=out)
    return EXIT_OK


def _write_trace(trace, path):
    if path:
        Path(path).write_text(trace.to_json() + "\n")


def cmd_capture(args, cfg: RunConfig, out) -> int:
    if args.program_file:
        n = encode(parse_program(Path(args.program_file).read_text()))
    elif args.program_index is not None:
        n = args.program_index
    else:
        raise ParseError("capture needs a program index or --program-file")
    seq = capture_sequence(halts_within, n, lambda k: Fraction(1, k))
    res = halts_within(n, cfg.fuel)
    status = f"halts at step {res.at_step}" if res.halted else f"running after {cfg.fuel} steps"
    print(f"program {n}: {len(decode(n))} instructions, {status}", file=out)
    print("k\tQ(n,k)\tx_k", file=out)
    for k, q, x in seq.table(cfg.fuel):
        print(f"{k}\t{q}\t{format_rational(x)}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON run configuration")
    common.add_argument("--fuel", type=int, default=argparse.SUPPRESS)
    common.add_argument("--trace-out", default=argparse.SUPPRESS)
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="machine step budget (overrides config)")
    common.add_argument("--index-bound", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="constructive-reals", parents=[common],
                                     description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approx", parents=[common], help="rational approximation of an expression")
    p.add_argument("expr")
    p.add_argument("-k", type=int, default=20, help="precision exponent")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("specker", parents=[common], help="print Specker terms s_0..s_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_specker)

    p = sub.add_parser("member", parents=[common], help="three-valued membership in A or B")
    p.add_argument("set", choices=["A", "B"])
    p.add_argument("x", nargs="+")
    p.add_argument("--json", action="store_true", help="one JSON report per point")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("bisect", parents=[common], help="bisection on a test oracle")
    p.add_argument("oracle", help="step@c or const@v")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--depth", type=int, default=20)
    p.set_defaults(func=cmd_bisect)

    p = sub.add_parser("capture", parents=[common], help="table of Q(n,k) and x_k = 1/Q(n,k)")
    p.add_argument("program_index", type=int, nargs="?")
    p.add_argument("--program-file")
    p.set_defaults(func=cmd_capture)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = load_config(getattr(args, "config", None))
        overrides = {name: getattr(args, attr) for name, attr in
                     (("fuel", "fuel"), ("trace_out", "trace_out"), ("budget", "budget"),
                      ("index_bound", "index_bound")) if hasattr(args, attr)}
        cfg = replace(cfg, **overrides).validate()
        args.strict = getattr(args, "strict", False)
        return args.func(args, cfg, out)
    except (ParseError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OutOfInterval, InvalidWitness, NoInitialGap, EnumerationExhausted) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except StepStalled as exc:
        print(f"StepStalled: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
