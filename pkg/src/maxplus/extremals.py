"""Direct search for the scaled extremals of {x : A (x) >= x}.

The solution set (with the bottom vector adjoined) is a finitely generated
subsemimodule whose unique scaled basis consists of its scaled extremal
vectors.  The search walks the matrix digraph:

* :func:`cycle_terminals` grows one candidate per rotation of a
  nonnegative elementary cycle, stopping as soon as the grown vector
  satisfies its current row.

* :func:`path_extremals` extends an extremal cycle candidate backward
  along a maximal feeder path, emitting a candidate per step and pruning
  the whole path at the first non-extremal step.

* :func:`extremal_basis` runs both over every nonnegative cycle and every
  maximal feeder path and returns the deduplicated canonical basis.

Extremality of each candidate is decided by an oracle predicate on scaled
vectors; the default is the span test against the closed-form generating
set (see :class:`maxplus.reference.SpanOracle`).  Passing a predicate that
always answers True turns the search into a plain generator enumeration,
useful for comparing against the reference constructions.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .digraph import (
    DEFAULT_MAX_CYCLES,
    Cycle,
    Digraph,
    FeederPath,
    feeder_paths,
    max_cycle_mean,
    nonneg_elementary_cycles,
    rotations,
)
from .reference import SpanOracle
from .semiring import NEG_INF, ExtReal, MpMatrix, MpVector, ScaledBasis, unit

Oracle = Callable[[MpVector], bool]
StepHook = Callable[[MpVector, bool], None]


def always_extremal(v: MpVector) -> bool:
    """Oracle that accepts everything; turns the search into enumeration."""
    return True


def row_satisfied(a: MpMatrix, i: int, x: MpVector) -> bool:
    """Whether x satisfies row i of A (x) >= x."""
    return a.row_apply(i, x) >= x[i]


def in_supereig(a: MpMatrix, x: MpVector) -> bool:
    """Whether x is a proper solution of A (x) >= x."""
    return x.is_proper and all(
        a.row_apply(i, x) >= x[i] for i in range(len(a))
    )


def combine_row(a: MpMatrix, i: int, x: MpVector, y: MpVector) -> MpVector:
    """Mix y into x without leaving row i's solution set.

    Returns  (y_i) (x)  join  (A_i (x)) (y).  When x satisfies row i, the
    result does too, whatever y is; this is the single step from which
    both the cycle and the path constructions are built.
    """
    return x.scale(y[i]).join(y.scale(a.row_apply(i, x)))


@dataclass(frozen=True)
class RotationRun:
    """Outcome of growing one rotation of a cycle.

    ``steps`` counts grow steps actually taken (0 to t-1); the run stops
    early as soon as the current vector satisfies its current row.
    ``terminal`` is the grown vector as built, ``scaled`` its scaled form,
    and ``extremal`` the oracle's verdict on the scaled form.
    """

    start: int
    steps: int
    terminal: MpVector
    scaled: MpVector
    extremal: bool


@dataclass(frozen=True)
class CycleRun:
    """All rotation runs of one cycle, in rotation order."""

    cycle: Cycle
    runs: tuple[RotationRun, ...]

    def extremals(self) -> list[MpVector]:
        return [r.scaled for r in self.runs if r.extremal]

    def run_for(self, start: int) -> RotationRun:
        for r in self.runs:
            if r.start == start:
                return r
        raise KeyError(start)


def cycle_terminals(a: MpMatrix, cycle: Cycle, oracle: Oracle) -> CycleRun:
    """Grow a solution along every rotation of a nonnegative cycle.

    For rotation (j_1, ..., j_t) the candidate starts as the unit vector
    at j_1 and, while the current row j_p is still violated, absorbs the
    next unit vector at the arc's cost:

        v <- e(j_{p+1})  join  (a[j_p][j_{p+1}]) (v)

    The loop always ends in a solution: either a row check succeeded
    early, or all t-1 steps ran and the cycle's nonnegative weight closes
    the final row.
    """
    if cycle.weight < 0:
        raise ValueError("cycle must have nonnegative weight")
    n = len(a)
    runs = []
    for rot in rotations(cycle):
        nodes = rot.nodes
        t = len(nodes)
        v = unit(n, nodes[0])
        steps = 0
        while steps <= t - 2 and not row_satisfied(a, nodes[steps], v):
            w = a.entry(nodes[steps], nodes[steps + 1])
            if w is NEG_INF:
                raise ValueError(
                    f"cycle arc {nodes[steps]} -> {nodes[steps + 1]} "
                    "is not an arc of the matrix"
                )
            v = unit(n, nodes[steps + 1]).join(v.scale(w))
            steps += 1
        scaled = v.scaled()
        runs.append(
            RotationRun(nodes[0], steps, v, scaled, oracle(scaled))
        )
    return CycleRun(cycle, tuple(runs))


def path_extremals(
    a: MpMatrix,
    path: FeederPath,
    terminal: MpVector,
    oracle: Oracle,
    on_step: StepHook | None = None,
) -> list[MpVector]:
    """Extend an extremal cycle candidate backward along a feeder path.

    Walking the path (l_1, ..., l_m) from the cycle end inward, each step
    absorbs the unit vector at the next node:

        v <- v  join  (A_l (v)) (e(l))

    Stops without emitting when the node's own unit vector is already a
    solution of its row (a self-loop of nonnegative weight), and stops
    after the first non-extremal step; later steps of this path cannot be
    extremal either.  Emits scaled vectors in step order and reports every
    step's verdict to ``on_step`` when given.

    ``terminal`` is the grown vector of the rotation anchored at the
    path's endnode; any scalar multiple gives the same emissions.
    """
    nodes = path.nodes
    if len(nodes) < 2:
        raise ValueError("feeder path needs at least two nodes")
    n = len(a)
    v = terminal
    out: list[MpVector] = []
    for q in range(len(nodes) - 2, -1, -1):
        node = nodes[q]
        if a.entry(node, node) >= 0:
            break
        v = v.join(unit(n, node).scale(a.row_apply(node, v)))
        scaled = v.scaled()
        ok = oracle(scaled)
        if on_step is not None:
            on_step(scaled, ok)
        if not ok:
            break
        out.append(scaled)
    return out


@dataclass(frozen=True)
class SearchStats:
    """Work counters for one basis search.

    ``candidates`` counts oracle-accepted emissions with multiplicity;
    ``duplicates`` is how many of those repeated an earlier emission.
    Both are independent of traversal order and thread count.
    """

    cycles: int
    paths: int
    candidates: int
    duplicates: int


@dataclass(frozen=True)
class BasisResult:
    """Scaled basis of {x : A (x) >= x} plus search diagnostics."""

    basis: ScaledBasis
    cycle_mean: ExtReal
    solvable: bool
    stats: SearchStats


def extremal_basis(
    a: MpMatrix,
    *,
    oracle: Oracle | None = None,
    max_cycles: int | None = DEFAULT_MAX_CYCLES,
    threads: int = 1,
) -> BasisResult:
    """Scaled basis of the solutions of A (x) >= x.

    Proper solutions exist exactly when the maximum cycle mean is
    nonnegative; otherwise the basis is empty.  With the default oracle
    the result is the set of scaled extremals, the unique scaled basis.
    With ``oracle=always_extremal`` the search keeps every grown vector
    and returns the full enumeration instead (a generating set, usually
    redundant).

    Cycles are processed independently, in parallel when ``threads`` > 1;
    results merge in cycle order, so output does not depend on thread
    count.
    """
    lam = max_cycle_mean(a)
    solvable = lam >= 0
    if not solvable:
        return BasisResult(ScaledBasis(()), lam, False, SearchStats(0, 0, 0, 0))
    d = Digraph.from_matrix(a)
    cycles = nonneg_elementary_cycles(d, max_cycles)
    if oracle is None:
        oracle = SpanOracle(a, cycles=cycles, max_cycles=max_cycles)

    def search_cycle(cycle: Cycle) -> tuple[list[MpVector], int]:
        crun = cycle_terminals(a, cycle, oracle)
        emitted = crun.extremals()
        paths = feeder_paths(d, cycle, max_cycles)
        for path in paths:
            run = crun.run_for(path.end)
            if run.extremal:
                emitted.extend(path_extremals(a, path, run.scaled, oracle))
        return emitted, len(paths)

    per_cycle = _map_cycles(search_cycle, cycles, threads)
    pool: list[MpVector] = []
    n_paths = 0
    for emitted, k in per_cycle:
        pool.extend(emitted)
        n_paths += k
    basis = ScaledBasis(pool)
    stats = SearchStats(
        cycles=len(cycles),
        paths=n_paths,
        candidates=len(pool),
        duplicates=len(pool) - len(basis),
    )
    return BasisResult(basis, lam, True, stats)


def generator_enumeration(
    a: MpMatrix,
    *,
    max_cycles: int | None = DEFAULT_MAX_CYCLES,
    threads: int = 1,
) -> BasisResult:
    """The search with every candidate kept: a scaled generating set."""
    return extremal_basis(
        a, oracle=always_extremal, max_cycles=max_cycles, threads=threads
    )


def is_extremal(a: MpMatrix, x: MpVector) -> bool:
    """Whether x is a scaled-extremal direction of the solution set.

    True exactly when x is a proper solution whose scaled form is not a
    combination of the other scaled closed-form generators.  Builds a
    fresh oracle per call; use :class:`maxplus.reference.SpanOracle`
    directly when testing many vectors against one matrix.
    """
    if not in_supereig(a, x):
        return False
    return SpanOracle(a)(x.scaled())


def _map_cycles(fn, cycles: Sequence[Cycle], threads: int) -> list:
    if threads > 1 and len(cycles) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, cycles))
    return [fn(c) for c in cycles]
