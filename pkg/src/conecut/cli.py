"""Command line entry point: ``conecut solve|oracle|gen|bench``."""

import argparse
import logging
import sys

import numpy as np

from .bench import benchmark, parse_family, summarize, to_csv, to_text
from .cone import cone_view, format_table, relative_heights, t_value_table
from .exceptions import ConeCutError, ParseError
from .generators import klee_minty, random_instance
from .io import dump_trace, read_problem, render_problem, trace_document
from .oracle import brute_force_oracle
from .rules import RuleChoice
from .solver import SolverConfig, Status, solve
from .tableau import _pivot_inplace, initial_tableau

EXIT_CODES = {
    Status.OPTIMAL: 0,
    Status.OPTIMAL_INTERVAL: 0,
    Status.INFEASIBLE: 2,
    Status.UNBOUNDED: 3,
    Status.ITERATION_LIMIT: 5,
}
EXIT_INPUT = 4
SKILLS = ("cut", "eliminate", "fall")


def _vec(values):
    return "(" + ", ".join(f"{v:.10g}" for v in np.asarray(values, dtype=float)) + ")"


def _skills(text):
    chosen = {s.strip() for s in text.split(",") if s.strip()}
    unknown = chosen - set(SKILLS)
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown skill(s): {', '.join(sorted(unknown))}")
    return chosen


def _point(text):
    try:
        return np.array([float(v) for v in text.split(",")])
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated vector: {text!r}") from None


def _print_solution(sol, out):
    print(f"status: {sol.status.value}", file=out)
    if sol.status in (Status.OPTIMAL, Status.OPTIMAL_INTERVAL, Status.ITERATION_LIMIT):
        print(f"value: {sol.objective:.12g}", file=out)
    if sol.dual_point is not None and sol.status is not Status.INFEASIBLE:
        print(f"y*: {_vec(sol.dual_point)}", file=out)
    if sol.dual_interval is not None:
        iv = sol.dual_interval
        far = _vec(iv.q_b) if iv.q_b is not None else "unbounded"
        print(f"interval: [{_vec(iv.q_a)}, {far}]", file=out)
    if sol.primal_point is not None:
        print(f"x*: {_vec(sol.primal_point)}", file=out)
    print(f"pivots: {sol.pivots}", file=out)


def _show_tables(problem, sol, out):
    """Replay the pivots, printing tableau, t-values and relative heights before each."""
    tab = initial_tableau(problem)
    step = 0
    for ev in sol.trace + [None]:
        if ev is not None and ev["kind"] not in ("pivot", "polish"):
            continue
        view = cone_view(tab)
        tv = t_value_table(view)
        heights, mask = relative_heights(view, tv)
        print(format_table(tab, f"-- table {step}"), file=out)
        print(format_table(tab, "t-values", tv.entries, tv.defined), file=out)
        print(format_table(tab, "relative heights", heights, mask), file=out)
        if ev is None:
            break
        print(f"pivot at row {ev['row'] + 1}, column {problem.plane_name(ev['entering'])}\n", file=out)
        _pivot_inplace(tab, ev["row"], ev["entering"])
        step += 1


def cmd_solve(args, out):
    problem = read_problem(args.file)
    config = SolverConfig(
        rule=args.rule,
        enable_elimination="eliminate" in args.skills,
        enable_falling="fall" in args.skills,
        feasible_point=args.feasible_point,
        epsilon=args.tol,
        max_pivots=args.max_pivots,
    )
    sol = solve(problem, config)
    if args.show_tables:
        _show_tables(problem, sol, out)
    _print_solution(sol, out)
    if args.trace:
        dump_trace(trace_document(problem, config, sol), args.trace)
    return EXIT_CODES[sol.status]


def cmd_oracle(args, out):
    sol = brute_force_oracle(read_problem(args.file))
    _print_solution(sol, out)
    for k, alt in enumerate(sol.alternatives):
        print(f"optimal vertex {k + 1}: {_vec(alt)}", file=out)
    return EXIT_CODES[sol.status]


def cmd_gen(args, out):
    if args.family == "klee-minty":
        if len(args.params) != 1:
            raise ValueError("usage: gen klee-minty M")
        problem = klee_minty(int(args.params[0]))
    else:
        if len(args.params) != 3:
            raise ValueError("usage: gen random SEED M N")
        seed, m, n = (int(v) for v in args.params)
        problem = random_instance(seed, m, n)
    out.write(render_problem(problem))
    return 0


def cmd_bench(args, out):
    instances = [inst for spec in args.family for inst in parse_family(spec)]
    config = SolverConfig(enable_elimination="eliminate" in args.skills,
                          enable_falling="fall" in args.skills)
    rows = benchmark(args.rules, instances, config, workers=args.workers)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(to_csv(rows))
    out.write(to_text(rows))
    for rule, total in summarize(rows).items():
        print(f"total pivots {rule}: {total}", file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="conecut", description="Cone-cutting LP solver.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="verb", required=True)

    rules = [r.value for r in RuleChoice]
    p = sub.add_parser("solve", help="solve an LPT file")
    p.add_argument("file")
    p.add_argument("--rule", choices=rules, default=RuleChoice.HIGHEST.value)
    p.add_argument("--skills", type=_skills, default={"cut"}, help="comma list of cut,eliminate,fall")
    p.add_argument("--feasible-point", type=_point, help="comma separated dual feasible point")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-pivots", type=int)
    p.add_argument("--trace", metavar="OUT.json")
    p.add_argument("--show-tables", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute-force vertex enumeration")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="print a generated problem in LPT format")
    p.add_argument("family", choices=["klee-minty", "random"])
    p.add_argument("params", nargs="+")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="compare pivot rules")
    p.add_argument("--rules", type=lambda s: [r.strip() for r in s.split(",")],
                   default=["deepest", "steepest", "highest"])
    p.add_argument("--family", action="append", required=True,
                   help="klee-minty:LO-HI or random:COUNT:M:N[:SEED]; repeatable")
    p.add_argument("--skills", type=_skills, default={"cut"})
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", metavar="CSV")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except (OSError, ParseError, ValueError, ConeCutError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
