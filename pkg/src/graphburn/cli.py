"""Command-line entry point: ``graphburn {burn,gen,verify,bounds}``."""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import generators
from .burning import (
    BudgetExceeded,
    exact_burning_number,
    lower_bound_diameter,
    simulate,
    verify,
)
from .decomposition import (
    DecompositionStructureError,
    InvalidDecompositionError,
    length_of,
    validate,
)
from .dense import burn_dense, dense_bound
from .graph import UNREACHABLE, DisconnectedGraphError, GraphError, metrics
from .io import (
    FormatError,
    RunReport,
    format_decomposition,
    format_graph,
    parse_schedule,
    read_decomposition,
    read_graph,
)
from .pathlength import PreconditionError, burn_pathlen, pathlen_bound
from .treelength import search_g_star

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3

EPILOG = """\
exit codes:
  0  success (for verify: the schedule burns the graph in time)
  1  verify only: the schedule does not burn the graph in time
  2  input error (unreadable or malformed files, bad arguments)
  3  precondition violation (missing or unsuitable decomposition,
     disconnected graph, exact-solver budget exhausted)
"""

# family -> (parameter names, builder); builders take the parsed ints and the seed
FAMILIES = {
    "path": (("n",), lambda p, s: generators.gen_path(*p)),
    "cycle": (("n",), lambda p, s: generators.gen_cycle(*p)),
    "star": (("leaves",), lambda p, s: generators.gen_star(*p)),
    "spider": (("legs", "length"), lambda p, s: generators.gen_spider(*p)),
    "grid": (("rows", "cols"), lambda p, s: generators.gen_grid(*p)),
    "mindeg": (("n", "delta"), lambda p, s: generators.gen_random_min_degree(*p, s)),
    "interval": (("n", "max_coord"), lambda p, s: generators.gen_interval(*p, s)),
    "ktree": (("n", "k"), lambda p, s: generators.gen_ktree_chordal(*p, s)),
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphburn",
        description="Graph burning schedules, bounds and instance generators.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    burn = sub.add_parser("burn", help="compute a burning schedule", epilog=EPILOG,
                          formatter_class=argparse.RawDescriptionHelpFormatter)
    burn.add_argument("algorithm", choices=["dense", "pathlen", "treelen", "exact"])
    burn.add_argument("--graph", required=True, help="graph file (p burn format)")
    burn.add_argument("--decomp", help="decomposition file (required by pathlen/treelen)")
    burn.add_argument("--trace", action="store_true", help="print per-iteration details")
    burn.add_argument("--json", action="store_true", help="single-line JSON report")
    burn.add_argument("--root", type=int, default=1, help="treelen root bag (1-based)")
    burn.add_argument("--binary", action="store_true",
                      help="treelen: bisect for the smallest guess (cross-checked)")
    burn.add_argument("--budget", type=int, help="exact: maximum rounds to try")
    burn.add_argument("--timing", action="store_true",
                      help="include wall time (makes output nondeterministic)")

    gen = sub.add_parser("gen", help="write a generated instance", epilog=EPILOG,
                         formatter_class=argparse.RawDescriptionHelpFormatter)
    gen.add_argument("family", choices=sorted(FAMILIES))
    gen.add_argument("params", nargs="*", type=int, help="family parameters")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="output prefix")

    ver = sub.add_parser("verify", help="check a schedule", epilog=EPILOG,
                         formatter_class=argparse.RawDescriptionHelpFormatter)
    ver.add_argument("--graph", required=True)
    ver.add_argument("--schedule", required=True, help='activators, e.g. "1 3"')
    ver.add_argument("--rounds", type=int, required=True)
    ver.add_argument("--trace", action="store_true", help="print per-vertex burn rounds")

    bnd = sub.add_parser("bounds", help="lower and upper bounds", epilog=EPILOG,
                         formatter_class=argparse.RawDescriptionHelpFormatter)
    bnd.add_argument("--graph", required=True)
    bnd.add_argument("--decomp")
    return parser


def _load(args) -> tuple:
    g = read_graph(args.graph)
    t = read_decomposition(args.decomp) if getattr(args, "decomp", None) else None
    return g, t


def cmd_burn(args, out) -> int:
    g, t = _load(args)
    if g.n == 0:
        raise CliError("graph has no vertices", EXIT_INPUT)
    info = metrics(g)
    lower = lower_bound_diameter(info.diameter)
    started = time.perf_counter()
    trace_lines: list[str] = []

    if args.algorithm == "dense":
        plan = burn_dense(g)
        schedule, bound = list(plan.schedule), plan.bound
        extra = {"delta": info.min_degree, "r": plan.r if plan.r is not None else "-",
                 "radius_shortcut": plan.used_radius_shortcut}
    elif args.algorithm == "exact":
        rounds, schedule = exact_burning_number(g, args.budget)
        bound, lower = rounds, rounds
        extra = {}
    else:
        if t is None:
            raise CliError(f"{args.algorithm} requires a decomposition (--decomp)",
                           EXIT_PRECONDITION)
        if args.algorithm == "pathlen":
            plan = burn_pathlen(g, t)
            schedule, bound = list(plan.schedule), plan.bound
            extra = {"diameter": plan.diameter, "pl": plan.path_length,
                     "exact_fallback": plan.used_exact_solver}
            if args.trace and plan.spine:
                trace_lines.append(f"spine: {' '.join(map(str, plan.spine))}")
                trace_lines.append(f"spine_schedule: {' '.join(map(str, plan.spine_schedule))}")
        else:
            if not (1 <= args.root <= t.size):
                raise CliError(f"root bag {args.root} out of range 1..{t.size}", EXIT_INPUT)
            res = search_g_star(g, t, root=args.root - 1, binary=args.binary)
            schedule, bound, lower = list(res.schedule), res.upper, res.lower
            extra = {"g_star": res.g_star, "tl": res.tl,
                     "ratio_bound": f"{res.ratio_bound.numerator}/{res.ratio_bound.denominator}"}
            if args.trace:
                trace_lines.extend(step.to_line() for step in res.outcome.trace)
    elapsed = time.perf_counter() - started

    report = simulate(g, schedule)
    if trace_lines and args.json:
        extra["trace"] = trace_lines
    run = RunReport(
        algorithm=args.algorithm,
        n=g.n,
        schedule=schedule,
        completion=int(report.completion_round),
        complete=report.complete,
        bound=bound,
        lower=lower,
        ratio=int(report.completion_round) / lower,
        extra=extra,
        wall_time=elapsed if args.timing else None,
    )
    if trace_lines and not args.json:
        out.write("\n".join(trace_lines) + "\n")
    run.write(out, args.json)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    names, build = FAMILIES[args.family]
    if len(args.params) != len(names):
        raise CliError(f"{args.family} takes parameters: {' '.join(names)}", EXIT_INPUT)
    try:
        inst = build(args.params, args.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    written = [f"{args.out}.burn"]
    with open(written[0], "w", encoding="utf-8") as fh:
        fh.write(format_graph(inst.graph))
    if inst.decomposition is not None:
        written.append(f"{args.out}.tdec")
        with open(written[1], "w", encoding="utf-8") as fh:
            fh.write(format_decomposition(inst.decomposition))
    out.write(f"family: {inst.family}\n")
    out.write(f"n: {inst.graph.n}\nm: {inst.graph.m}\n")
    out.write(f"diameter: {inst.diameter}\nmin_degree: {inst.min_degree}\n")
    out.write("wrote: " + " ".join(written) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = read_graph(args.graph)
    schedule = parse_schedule(args.schedule, g.n)
    if not schedule and g.n > 0:
        raise CliError("empty schedule", EXIT_INPUT)
    report = simulate(g, schedule)
    ok = verify(g, schedule, args.rounds)
    if args.trace:
        for v, r in enumerate(report.burn_round):
            out.write(f"vertex {v}: round {r if r != UNREACHABLE else '-'}\n")
    completion = report.completion_round if report.complete else "-"
    out.write(f"completion: {completion}\n")
    out.write(("ok" if ok else "fail") + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bounds(args, out) -> int:
    g, t = _load(args)
    info = metrics(g)
    out.write(f"n: {g.n}\ndiameter: {info.diameter}\nmin_degree: {info.min_degree}\n")
    out.write(f"lower: {lower_bound_diameter(info.diameter)}\n")
    out.write(f"dense: {dense_bound(g.n, info.min_degree)}\n")
    if t is not None:
        validate(g, t)
        length = length_of(g, t)
        out.write(f"length: {length}\n")
        if t.is_path_shaped() and info.diameter >= 2:
            out.write(f"pathlen: {pathlen_bound(info.diameter, length)}\n")
    return EXIT_OK


COMMANDS = {"burn": cmd_burn, "gen": cmd_gen, "verify": cmd_verify, "bounds": cmd_bounds}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (FormatError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, DisconnectedGraphError, InvalidDecompositionError,
            DecompositionStructureError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
