"""Command-line front end: solve and generate instances, run benchmarks.

Bit strings are printed with index 0 FIRST, i.e. the leftmost character is
the least-significant bit of the integer encoding.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .core import DimensionCapError, MAX_DIM
from .instances import ParseError, bench_seed, load_instance, random_instance, save_instance
from .solver import MODES, NAIVE_MAX_DIM, SolveConfig, Solution, solve

BIT_ORDER_NOTE = (
    "bit strings are printed with index 0 first, i.e. the leftmost character "
    "is the least significant bit of the integer encoding"
)

CSV_HEADER = "n,mode,rep,seconds,value"


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark measurement: dimension, solver mode, repetition, timing."""

    n: int
    mode: str
    rep: int
    seconds: float
    value: float

    def csv_row(self) -> str:
        return f"{self.n},{self.mode},{self.rep},{self.seconds!r},{self.value!r}"


def _bitstring(minimizer) -> str:
    return "".join(str(int(b)) for b in minimizer)


def _print_solution(instance_n: int, mode: str, sol: Solution, as_json: bool) -> None:
    if as_json:
        print(json.dumps({
            "n": instance_n,
            "mode": mode,
            "value": sol.value,
            "minimizer": _bitstring(sol.minimizer),
            "evaluations": sol.evaluations,
            "seconds": sol.elapsed,
        }))
    else:
        print(f"minimizer {_bitstring(sol.minimizer)}")
        print(f"value {sol.value!r}")
        print(f"evaluations {sol.evaluations}")
        print(f"seconds {sol.elapsed:.6g}")


def cmd_solve(args: argparse.Namespace) -> int:
    instance = load_instance(args.file, strict=args.strict)
    config = SolveConfig(threads=args.threads, fixed_bits=args.fixed_bits, mode=args.mode)
    sol = solve(instance, config)
    _print_solution(instance.n, args.mode, sol, args.json)
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError(f"-n must be >= 1, got {args.n}")
    instance = random_instance(args.n, args.seed, args.density)
    save_instance(instance, args.output)
    return 0


def _warmup(modes: list[str], threads: int) -> None:
    # First call into a compiled kernel pays the JIT cost; keep that out of
    # the timed measurements.
    small = random_instance(6, seed=0)
    for mode in modes:
        solve(small, SolveConfig(threads=threads, mode=mode))


def cmd_bench(args: argparse.Namespace) -> int:
    modes = [m.strip() for m in args.modes.split(",") if m.strip()]
    if not modes:
        raise ValueError("--modes must name at least one mode")
    for mode in modes:
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; choose from {MODES}")
    if args.n_min < 1 or args.n_max < args.n_min:
        raise ValueError("need 1 <= --n-min <= --n-max")
    if args.reps < 1:
        raise ValueError("--reps must be >= 1")
    if "naive" in modes and args.n_max > NAIVE_MAX_DIM:
        print(
            f"refusing: --n-max {args.n_max} exceeds the naive-solver guard "
            f"{NAIVE_MAX_DIM}; drop naive from --modes or lower --n-max",
            file=sys.stderr,
        )
        return 3

    _warmup(modes, args.threads)

    records: list[BenchRecord] = []
    for n in range(args.n_min, args.n_max + 1):
        for mode in modes:
            for rep in range(args.reps):
                instance = random_instance(n, bench_seed(n, rep))
                sol = solve(instance, SolveConfig(threads=args.threads, mode=mode))
                records.append(BenchRecord(
                    n=n,
                    mode=mode,
                    rep=rep,
                    seconds=max(sol.elapsed, 1e-9),
                    value=sol.value,
                ))

    if args.output:
        new_file = not os.path.exists(args.output) or os.path.getsize(args.output) == 0
        with open(args.output, "a", encoding="utf-8") as fh:
            if new_file:
                fh.write(CSV_HEADER + "\n")
            for rec in records:
                fh.write(rec.csv_row() + "\n")
        summary_out = sys.stdout
    else:
        print(CSV_HEADER)
        for rec in records:
            print(rec.csv_row())
        summary_out = sys.stderr

    if "naive" in modes and "incremental" in modes:
        for n in range(args.n_min, args.n_max + 1):
            naive_t = {r.rep: r.seconds for r in records if r.n == n and r.mode == "naive"}
            incr_t = {r.rep: r.seconds for r in records if r.n == n and r.mode == "incremental"}
            ratios = [naive_t[rep] / incr_t[rep] for rep in sorted(naive_t)]
            mean = sum(ratios) / len(ratios)
            print(f"n={n} mean speedup incremental vs naive: {mean:.2f}x", file=summary_out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubrute",
        description="Exact QUBO solving by Gray-code ordered brute force.",
        epilog=f"Output convention: {BIT_ORDER_NOTE}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser(
        "solve",
        help="solve an instance file",
        description=f"Solve a QUBO instance file; {BIT_ORDER_NOTE}.",
    )
    p_solve.add_argument("file", help="instance file in the triplet text format")
    p_solve.add_argument("--mode", choices=MODES, default="incremental",
                         help="search strategy (default: incremental)")
    p_solve.add_argument("--threads", type=int, default=1,
                         help="worker threads for --mode parallel (default: 1)")
    p_solve.add_argument("--fixed-bits", type=int, default=None,
                         help="subspace bits for --mode parallel (default: from --threads)")
    p_solve.add_argument("--json", action="store_true",
                         help="emit a single JSON object instead of text")
    p_solve.add_argument("--strict", action="store_true",
                         help="reject entries below the diagonal instead of folding")
    p_solve.set_defaults(func=cmd_solve)

    p_gen = sub.add_parser(
        "generate",
        help="write a seeded random instance file",
        description="Generate a random instance, deterministic per (n, seed, density).",
    )
    p_gen.add_argument("-n", type=int, required=True, help=f"dimension, 1..{MAX_DIM}")
    p_gen.add_argument("--seed", type=int, required=True, help="64-bit generator seed")
    p_gen.add_argument("--density", type=float, default=1.0,
                       help="keep probability for each upper-triangle entry (default: 1.0)")
    p_gen.add_argument("-o", "--output", required=True, help="output file path")
    p_gen.set_defaults(func=cmd_generate)

    p_bench = sub.add_parser(
        "bench",
        help="time solver modes on seeded instances, emit CSV",
        description="Benchmark solver modes over a dimension range; emits CSV rows "
                    f"'{CSV_HEADER}'. Seeds depend only on (n, rep), so every mode "
                    "solves identical instances. Timing covers the solve call only.",
    )
    p_bench.add_argument("--n-min", type=int, required=True, help="smallest dimension")
    p_bench.add_argument("--n-max", type=int, required=True, help="largest dimension")
    p_bench.add_argument("--reps", type=int, default=10,
                         help="instances per (n, mode) cell (default: 10)")
    p_bench.add_argument("--modes", default="naive,incremental",
                         help="comma-separated modes (default: naive,incremental)")
    p_bench.add_argument("--threads", type=int, default=1,
                         help="worker threads for the parallel mode (default: 1)")
    p_bench.add_argument("-o", "--output", default=None,
                         help="CSV file to append to (default: CSV on stdout)")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DimensionCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
