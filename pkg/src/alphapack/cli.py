"""Command-line front end.

Subcommands: ``gen``, ``solve``, ``verify``, ``uniset`` and ``tradeoff``.
Set ``ALPHAPACK_BUDGET`` to change the enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import calc
from .algorithms import PROCEDURES, SolverConfig
from .io import read_instance, read_solution, solution_to_json, write_instance, write_json
from .model import BudgetExceeded, validate_instance
from .oracles import plant_instance, solution_errors
from .universal import (
    RetryCapExceeded,
    STRATEGIES,
    base_size_bound,
    build_universal,
    asymptotic_size_bound,
    verify_universal,
)

EXIT_OK, EXIT_FAIL, EXIT_BUDGET = 0, 1, 2


def _alphas(text: str) -> list[float]:
    try:
        return [float(a) for a in text.split(",") if a.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad alpha list {text!r}") from exc


def cmd_gen(args) -> int:
    inst = plant_instance(args.kind, args.k, args.noise, args.seed, args.extra)
    text = write_instance(inst, args.out)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = read_instance(args.input)
    problems = validate_instance(inst)
    if problems:
        print("invalid instance: " + "; ".join(problems[:5]), file=sys.stderr)
        return EXIT_FAIL
    kind, fn = PROCEDURES[args.alg]
    problem = inst.problem
    if args.alg == "pack2" and inst.kind == "p2":
        kind = "p2"
    if inst.kind != kind:
        print(f"{args.alg} needs a {kind} instance, got {inst.kind}", file=sys.stderr)
        return EXIT_FAIL
    k = args.k if args.k is not None else inst.planted_k
    if k is None:
        print("no --k given and the instance has no planted solution", file=sys.stderr)
        return EXIT_FAIL
    config = SolverConfig(epsilon=args.epsilon, c=args.c, seed=args.seed, swap_size=args.swap_size,
                          trials=args.trials, strategy=args.strategy)
    try:
        out = fn(problem, k, args.alpha, config)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    data = out.to_json()
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(f"{out.procedure}: {len(out.packing)} of target {out.target} "
              f"({'met' if out.met else 'not met'}), predicted base {out.predicted_base:.4f}, "
              f"{out.seconds:.3f}s")
        print(json.dumps(solution_to_json(out.packing)))
    if args.out:
        write_json(data, args.out)
    if out.met:
        return EXIT_OK
    # a miss is only a failure when a size-k solution is known to exist
    known = inst.planted_k is not None and inst.planted_k >= k
    return EXIT_FAIL if known else EXIT_OK


def cmd_verify(args) -> int:
    inst = read_instance(args.input)
    packing = read_solution(args.solution)
    errors = solution_errors(inst.problem, packing)
    if errors:
        for e in errors:
            print(e)
        return EXIT_FAIL
    print(f"valid packing of size {len(packing)}")
    return EXIT_OK


def cmd_uniset(args) -> int:
    try:
        fam = build_universal(args.n, args.k, args.p, args.alpha, args.strategy, args.seed)
        ok, bad = verify_universal(fam)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RetryCapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    report = {
        "params": list(fam.params),
        "strategy": args.strategy,
        "size": len(fam),
        "random_draw_size": base_size_bound(args.n, args.k, args.p, args.alpha),
        "asymptotic_bound": asymptotic_size_bound(args.n, args.k, args.p, args.alpha),
        "verified": ok,
        "counterexample": bad,
    }
    print(json.dumps(report, indent=2))
    if args.out:
        write_json(fam.to_json(), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_tradeoff(args) -> int:
    alphas = args.alphas if args.alphas else list(calc.TABLE_ALPHAS)
    try:
        rows = calc.emit_table(args.problem, alphas, args.epsilon)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(calc.format_csv(rows) if args.format == "csv" else calc.format_text(rows), end="" if args.format == "csv" else "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphapack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a planted instance")
    g.add_argument("--kind", choices=["p2", "3sp", "3dm"], required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--noise", type=int, default=0)
    g.add_argument("--extra", type=int, default=2, help="unused elements added to the plant")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="run a procedure on an instance")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--alg", choices=sorted(PROCEDURES), required=True)
    s.add_argument("--k", type=int, default=None, help="defaults to the planted size")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--epsilon", type=float, default=0.0)
    s.add_argument("--c", type=float, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--swap-size", type=int, default=3)
    s.add_argument("--trials", type=int, default=None)
    s.add_argument("--strategy", choices=STRATEGIES, default="base")
    s.add_argument("--json", action="store_true")
    s.add_argument("--out", default=None, help="also write the JSON outcome here")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution against an instance")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--solution", required=True)
    v.set_defaults(func=cmd_verify)

    u = sub.add_parser("uniset", help="build and verify a universal family")
    u.add_argument("--n", type=int, required=True)
    u.add_argument("--k", type=int, required=True)
    u.add_argument("--p", type=int, required=True)
    u.add_argument("--alpha", type=float, required=True)
    u.add_argument("--strategy", choices=STRATEGIES, default="pipeline")
    u.add_argument("--seed", type=int, default=0)
    u.add_argument("--out", default=None)
    u.set_defaults(func=cmd_uniset)

    t = sub.add_parser("tradeoff", help="print a running-time table")
    t.add_argument("--problem", choices=sorted(calc.PROBLEMS), required=True)
    t.add_argument("--alphas", type=_alphas, default=None)
    t.add_argument("--epsilon", type=float, default=0.0)
    t.add_argument("--format", choices=["text", "csv"], default="text")
    t.set_defaults(func=cmd_tradeoff)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
