"""Command line driver.

Subcommands:

* ``basis FILE``       scaled basis of A (x) >= x (methods: extremal, wang2020, dd)
* ``generators FILE``  unreduced generating set by the same methods
* ``lambda FILE``      maximum cycle mean, exact
* ``cycles FILE``      nonnegative elementary cycles with weights
* ``check FILE --vector "..."``  membership and extremality of one vector
* ``verify FILE``      recompute the basis three ways and compare

Exit codes: 0 success, 1 verify mismatch, 2 usage or parse error,
3 enumeration cap exceeded.  ``MAXPLUS_THREADS`` bounds internal
parallelism (default: all cores).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .digraph import (
    CycleLimitError,
    Digraph,
    feeder_paths,
    max_cycle_mean,
    nonneg_elementary_cycles,
)
from .extremals import (
    BasisResult,
    SearchStats,
    extremal_basis,
    generator_enumeration,
    in_supereig,
)
from .matrixio import MatrixDocument, MatrixParseError, parse_matrix, parse_vector
from .reference import (
    SpanOracle,
    TwoSidedSystem,
    bases_equal,
    cycle_path_generators,
    double_description,
    extremal_filter,
)
from .semiring import (
    NEG_INF,
    MpMatrix,
    format_scalar,
    format_vector,
    parse_scalar,
)

METHODS = ("extremal", "wang2020", "dd")


class UsageError(ValueError):
    """Bad flag value or environment setting."""


def thread_count() -> int:
    raw = os.environ.get("MAXPLUS_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"MAXPLUS_THREADS must be a positive integer, got {raw!r}")
    if k < 1:
        raise UsageError(f"MAXPLUS_THREADS must be >= 1, got {k}")
    return k


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxplus",
        description="Scaled bases of max-plus supereigenvector spaces, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, method: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="matrix file (n lines of n tokens)")
        p.add_argument(
            "--max-cycles",
            type=int,
            default=1_000_000,
            metavar="K",
            help="abort (exit 3) past K enumerated cycles or paths [%(default)s]",
        )
        if method:
            p.add_argument(
                "--method",
                choices=METHODS,
                default="extremal",
                help="computation route [%(default)s]",
            )
        return p

    p_basis = add("basis", "scaled basis of the solution space", method=True)
    p_basis.add_argument("--json", action="store_true", help="machine-readable output")
    p_basis.add_argument(
        "--lambda",
        dest="lam",
        metavar="L",
        help="solve A(x) >= L(x) instead (finite exact scalar)",
    )
    add("generators", "unreduced generating set", method=True)
    add("lambda", "maximum cycle mean")
    add("cycles", "nonnegative elementary cycles")
    p_check = add("check", "membership and extremality of one vector")
    p_check.add_argument(
        "--vector", required=True, metavar="V", help="n space-separated entries"
    )
    add("verify", "cross-check all three methods")
    return parser


def _load(path: str) -> MatrixDocument:
    return parse_matrix(Path(path).read_text())


def _effective(args) -> MpMatrix:
    doc = _load(args.file)
    lam = getattr(args, "lam", None)
    if lam is None:
        return doc.matrix
    try:
        shift = parse_scalar(lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if shift is NEG_INF:
        raise UsageError("--lambda must be finite")
    return MatrixDocument(doc.matrix, shift).effective_matrix()


def _basis_by_method(
    a: MpMatrix, method: str, cap: int, threads: int
) -> BasisResult:
    if method == "extremal":
        return extremal_basis(a, max_cycles=cap, threads=threads)
    lam = max_cycle_mean(a)
    if method == "wang2020":
        d = Digraph.from_matrix(a)
        cycles = nonneg_elementary_cycles(d, cap)
        n_paths = sum(len(feeder_paths(d, c, cap)) for c in cycles)
        gens = cycle_path_generators(a, cycles=cycles, max_cycles=cap)
        basis = extremal_filter(gens)
        stats = SearchStats(
            cycles=len(cycles),
            paths=n_paths,
            candidates=len(gens.vectors),
            duplicates=len(gens.vectors) - len(gens.scaled_set()),
        )
    else:
        gens = double_description(TwoSidedSystem.supereigen(a))
        basis = extremal_filter(gens)
        stats = SearchStats(0, 0, len(gens.vectors), 0)
    return BasisResult(basis, lam, lam >= 0, stats)


def _json_scalar(e):
    if e is NEG_INF:
        return None
    if isinstance(e, int):
        return e
    if e.denominator == 1:
        return int(e)
    return str(e)


def _print_unsolvable(result: BasisResult) -> None:
    if not result.solvable:
        print(
            "no proper solution: maximum cycle mean "
            f"{format_scalar(result.cycle_mean)} is negative",
            file=sys.stderr,
        )


def _cmd_basis(args, threads: int) -> int:
    a = _effective(args)
    result = _basis_by_method(a, args.method, args.max_cycles, threads)
    if args.json:
        payload = {
            "n": len(a),
            "lambda": format_scalar(result.cycle_mean),
            "solvable": result.solvable,
            "basis": [[_json_scalar(e) for e in v] for v in result.basis],
            "stats": {
                "cycles": result.stats.cycles,
                "paths": result.stats.paths,
                "candidates": result.stats.candidates,
                "duplicates": result.stats.duplicates,
            },
        }
        print(json.dumps(payload))
        return 0
    _print_unsolvable(result)
    for v in result.basis:
        print(format_vector(v))
    return 0


def _cmd_generators(args, threads: int) -> int:
    a = _effective(args)
    cap = args.max_cycles
    if args.method == "extremal":
        result = generator_enumeration(a, max_cycles=cap, threads=threads)
        _print_unsolvable(result)
        vectors = result.basis.vectors
    elif args.method == "wang2020":
        gens = cycle_path_generators(a, max_cycles=cap)
        vectors = gens.scaled_set()
    else:
        vectors = double_description(TwoSidedSystem.supereigen(a)).vectors
    for v in vectors:
        print(format_vector(v))
    return 0


def _cmd_lambda(args, threads: int) -> int:
    print(format_scalar(max_cycle_mean(_load(args.file).matrix)))
    return 0


def _cmd_cycles(args, threads: int) -> int:
    a = _load(args.file).matrix
    d = Digraph.from_matrix(a)
    for c in nonneg_elementary_cycles(d, args.max_cycles):
        nodes = " ".join(str(v + 1) for v in c.nodes)
        print(f"{nodes}\t{format_scalar(c.weight)}")
    return 0


def _cmd_check(args, threads: int) -> int:
    a = _load(args.file).matrix
    x = parse_vector(args.vector, len(a))
    member = in_supereig(a, x)
    extremal = False
    if member:
        extremal = SpanOracle(a, max_cycles=args.max_cycles)(x.scaled())
    print(f"member: {'yes' if member else 'no'}")
    print(f"extremal: {'yes' if extremal else 'no'}")
    return 0


def _three_bases(a: MpMatrix, cap: int, threads: int) -> dict[str, BasisResult]:
    return {m: _basis_by_method(a, m, cap, threads) for m in METHODS}


def _cmd_verify(args, threads: int) -> int:
    a = _load(args.file).matrix
    results = _three_bases(a, args.max_cycles, threads)
    bases = {m: r.basis for m, r in results.items()}
    names = list(bases)
    for other in names[1:]:
        if not bases_equal(bases[names[0]], bases[other]):
            left, right = bases[names[0]], bases[other]
            print(
                f"MISMATCH: {names[0]} found {len(left)} vectors, "
                f"{other} found {len(right)}",
                file=sys.stderr,
            )
            only_left = [v for v in left if v not in right]
            only_right = [v for v in right if v not in left]
            for v in only_left[:5]:
                print(f"  only {names[0]}: {format_vector(v)}", file=sys.stderr)
            for v in only_right[:5]:
                print(f"  only {other}: {format_vector(v)}", file=sys.stderr)
            return 1
    s = results["extremal"].stats
    print(f"OK: 3 methods agree, |basis|={len(bases['extremal'])}")
    print(
        f"stats: cycles={s.cycles} paths={s.paths} "
        f"candidates={s.candidates} duplicates={s.duplicates}"
    )
    return 0


_COMMANDS = {
    "basis": _cmd_basis,
    "generators": _cmd_generators,
    "lambda": _cmd_lambda,
    "cycles": _cmd_cycles,
    "check": _cmd_check,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        threads = thread_count()
        return _COMMANDS[args.command](args, threads)
    except (UsageError, MatrixParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CycleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main(sys.argv[1:]))
