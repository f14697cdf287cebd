"""Command-line entry point: ``laminar-blm {solve,exact,oracle,validate,gen,bench}``.

Exit codes: 0 success, 1 invalid instance, 2 usage error, 3 internal error.
Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

from . import bench
from .exceptions import InstanceError, OracleLimitError, ParseError, ValidationError
from .formats import parse_instance, serialize_instance
from .fptas import solve, solve_exact
from .generators import KINDS, gen_special
from .matroid import LaminarInstance
from .oracle import DEFAULT_LIMIT, enumerate_opt

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("laminar_blm")


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _pair(text: str) -> tuple:
    values = _int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected LO,HI, got {text!r}")
    return tuple(values)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


@contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _fraction_str(value) -> str | None:
    if value is None:
        return None
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def solve_report(instance: LaminarInstance, solution, wall_ms: float) -> dict:
    diag = solution.diagnostics
    report = {
        "mode": getattr(diag, "mode", "oracle"),
        "ids": sorted(solution.ids),
        "profit": solution.profit,
        "cost": solution.cost,
        "budget": instance.budget,
    }
    if diag is not None:
        report.update(
            rounded_profit=diag.rounded_profit,
            epsilon=_fraction_str(diag.epsilon),
            alpha=_fraction_str(diag.alpha),
            table_rows=int(diag.table_shape[0]),
            table_cols=int(diag.table_shape[1]),
            recursive_calls=diag.recursive_calls,
        )
    report["wall_ms"] = round(wall_ms, 3)
    return report


def _emit_report(report: dict, fmt: str, out) -> None:
    if fmt == "structured":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return
    width = max(len(k) for k in report)
    for key, value in report.items():
        if key == "ids":
            value = " ".join(value) if value else "(empty)"
        if value is None:
            continue
        out.write(f"{key:<{width}}  {value}\n")


def _load(args) -> LaminarInstance:
    return parse_instance(_read_text(args.instance))


def cmd_solve(args) -> int:
    instance = _load(args)
    start = time.perf_counter()
    if args.command == "solve":
        solution = solve(instance, args.epsilon)
    elif args.command == "exact":
        solution = solve_exact(instance)
    else:
        solution = enumerate_opt(instance, limit=args.limit)
    wall_ms = (time.perf_counter() - start) * 1000.0
    with _output(args.out) as out:
        _emit_report(solve_report(instance, solution, wall_ms), args.format, out)
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        instance = _load(args)
    except ValidationError as exc:
        issues = [{"code": i.code, "message": i.message, "sets": list(i.sets)} for i in exc.report.issues]
        for issue in exc.report.issues:
            print(f"error: {issue}", file=sys.stderr)
        with _output(args.out) as out:
            if args.format == "structured":
                out.write(json.dumps({"valid": False, "issues": issues}, indent=2) + "\n")
            else:
                out.write("invalid\n")
        return EXIT_INVALID
    with _output(args.out) as out:
        if args.format == "structured":
            out.write(json.dumps({"valid": True, "elements": len(instance), "family_size": len(instance.family)}, indent=2) + "\n")
        else:
            out.write(f"valid: {len(instance)} elements, {len(instance.family)} family sets\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    params = dict(
        cost_range=args.cost_range,
        profit_range=args.profit_range,
        budget=args.budget,
        k=args.k,
        groups=args.groups,
        capacities=args.capacities,
        depth=args.depth,
        branching=args.branching,
        max_capacity=args.max_capacity,
    )
    instance = gen_special(args.kind, n=args.n, seed=args.seed, **params)
    with _output(args.out) as out:
        out.write(serialize_instance(instance))
    return EXIT_OK


def cmd_bench(args) -> int:
    bench.warm_up()
    rows = bench.run_grid(
        args.sizes,
        args.epsilons,
        seed=args.seed,
        repeats=args.repeats,
        kind=args.kind,
        mode=args.mode,
        cost_range=args.cost_range,
        profit_range=args.profit_range,
        depth=args.depth,
        branching=args.branching,
        max_capacity=args.max_capacity,
    )
    with _output(args.out) as out:
        bench.write_csv(rows, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laminar-blm", description="Budgeted laminar matroid independent set solver.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, instance=True):
        if instance:
            p.add_argument("--instance", default="-", metavar="PATH", help="instance file (default: stdin)")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")

    p = sub.add_parser("solve", help="approximation scheme")
    common(p)
    p.add_argument("--epsilon", default="0.1", metavar="DECIMAL")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="exact pseudo-polynomial DP")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute-force enumeration")
    common(p)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="refuse instances with more elements")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="check an instance file")
    common(p)
    p.set_defaults(func=cmd_validate)

    def gen_options(p):
        p.add_argument("--kind", choices=KINDS, default="random_laminar")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cost-range", type=_pair, default=(1, 20), metavar="LO,HI")
        p.add_argument("--profit-range", type=_pair, default=(1, 20), metavar="LO,HI")
        p.add_argument("--depth", type=int, default=3)
        p.add_argument("--branching", type=int, default=3)

    p = sub.add_parser("gen", help="generate an instance")
    common(p, instance=False)
    gen_options(p)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--budget", type=int)
    p.add_argument("--k", type=int, help="cardinality bound (kind=cardinality)")
    p.add_argument("--groups", type=_int_list, help="group sizes, e.g. 2,2")
    p.add_argument("--capacities", type=_int_list, help="group capacities (kind=partition)")
    p.add_argument("--max-capacity", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="timing sweep, CSV output")
    common(p, instance=False)
    gen_options(p)
    p.add_argument("--sizes", type=_int_list, default=[50, 100, 200])
    p.add_argument("--epsilons", type=lambda s: [x for x in s.split(",") if x], default=["0.5", "0.1"])
    p.add_argument("--mode", choices=("fptas", "exact"), default="fptas")
    p.add_argument("--repeats", type=int, default=1, help="instances per size, seeds SEED, SEED+1, ...")
    p.add_argument("--max-capacity", type=int, help="capacity cap for generated sets")
    p.set_defaults(func=cmd_bench, depth=6)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (ValidationError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OracleLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InstanceError as exc:
        code = EXIT_USAGE if exc.code in ("BAD_PARAMS", "BAD_EPSILON", "ZERO_EPSILON") else EXIT_INVALID
        print(f"error: {exc}", file=sys.stderr)
        return code
    except Exception as exc:  # noqa: BLE001
        log.debug("internal error", exc_info=True)
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
