"""Command line interface.

Exit codes: 0 success, 1 infeasible answer or mismatch, 2 usage error,
3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import run_bench, write_csv
from .formats import check_solution, emit_instance, emit_solution, majority_tournament, parse_instance, parse_rankings, solution_dict
from .generator import FAMILIES, GenSpec, generate
from .oracle import OracleRefused, subset_dp_opt
from .solver import KLimitExceeded, SolveResult, decide_k, solve
from .tournament import InputError

OK, NO, USAGE, IO_ERROR = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    return Path(path).read_text()


def _report(res: SolveResult, as_json: bool) -> None:
    if as_json:
        print(json.dumps(solution_dict(res)))
        return
    print(f"opt_size {res.opt_size}")
    print("order " + " ".join(map(str, res.order)))
    for u, v in sorted(res.fas):
        print(f"fas {u} {v}")
    print(f"trials {len(res.trials)} (last: k={res.final.k} {res.final.outcome})")


def cmd_solve(args) -> int:
    t = parse_instance(_read(args.file))
    try:
        res = solve(t, max_k=args.max_k)
    except KLimitExceeded as exc:
        print(f"no feedback arc set of size <= {exc.max_k}")
        return NO
    _report(res, args.json)
    if args.out:
        Path(args.out).write_text(emit_solution(res))
    if args.oracle:
        try:
            ref = subset_dp_opt(t)
        except OracleRefused as exc:
            print(f"oracle: {exc}", file=sys.stderr)
            return USAGE
        if ref.opt_size != res.opt_size:
            print(f"MISMATCH: solver {res.opt_size} vs oracle {ref.opt_size}", file=sys.stderr)
            return NO
        if not args.json:
            print(f"oracle agrees: {ref.opt_size}")
    return OK


def cmd_decide(args) -> int:
    t = parse_instance(_read(args.file))
    res = decide_k(t, args.k)
    if res is None:
        print("no")
        return NO
    print(f"yes {res.opt_size}")
    return OK


def cmd_gen(args) -> int:
    family = args.family
    spec = GenSpec(family, args.n, args.planted or 0, args.seed)
    t = generate(spec)
    Path(args.out).write_text(emit_instance(t, [spec.describe()]))
    return OK


def cmd_verify(args) -> int:
    t = parse_instance(_read(args.instance))
    problems = check_solution(t, _read(args.solution))
    if problems:
        for p in problems:
            print(p)
        return NO
    print("ok")
    return OK


def cmd_rank(args) -> int:
    t = majority_tournament(parse_rankings(_read(args.profile)))
    res = solve(t)
    _report(res, args.json)
    return OK


def cmd_bench(args) -> int:
    try:
        k_list = [int(x) for x in args.k_list.split(",") if x]
    except ValueError:
        raise _UsageError(f"--k-list must be comma separated integers, got {args.k_list!r}")
    rows = run_bench(args.family, args.n, k_list, range(args.seeds))
    write_csv(rows, args.out)
    for r in rows:
        print(f"k'={r.k_planted} seed={r.seed} opt={r.opt} {r.wall_ms:.1f} ms maxC={r.max_candidate} states={r.dp_states}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tourfas", description="Exact feedback arc set in tournaments.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="minimum feedback arc set of an instance file")
    s.add_argument("file")
    s.add_argument("--max-k", type=int)
    s.add_argument("--oracle", action="store_true", help="cross-check with the subset DP oracle")
    s.add_argument("--json", action="store_true")
    s.add_argument("--out", help="write the solution file here")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("decide", help="is there a feedback arc set of size <= K?")
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("gen", help="write a generated instance")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--planted", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="check a solution file against its instance")
    s.add_argument("instance")
    s.add_argument("solution")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("rank", help="majority tournament of a ranking profile, then solve")
    s.add_argument("profile")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("bench", help="benchmark seeded instances to CSV")
    s.add_argument("--family", choices=FAMILIES, default="planted")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k-list", required=True)
    s.add_argument("--seeds", type=int, default=10, help="number of seeds, run as 0..S-1")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "gen" and args.family == "planted" and args.planted is None:
            raise _UsageError("--planted is required for the planted family")
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return IO_ERROR
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
