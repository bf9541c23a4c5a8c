"""Independent reference constructions for supereigenvector spaces.

Two self-contained ways to produce a generating set of the solution space
of A (x) >= x, used to cross-check the extremal search and to decide
extremality:

* :func:`cycle_path_generators` walks every nonnegative elementary cycle
  and every maximal feeder path and writes down explicit generators in
  closed form, one per cycle rotation arc and one per path step.

* :func:`double_description` incrementally intersects half-spaces of a
  general two-sided system lower (x) <= upper (x), starting from the unit
  vectors and combining satisfier/violator pairs row by row.

Both return generating sets that usually contain redundant vectors;
:func:`extremal_filter` reduces any generating set to the scaled extremals,
which form the unique scaled basis of the generated subsemimodule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .digraph import (
    DEFAULT_MAX_CYCLES,
    Cycle,
    Digraph,
    feeder_paths,
    nonneg_elementary_cycles,
)
from .semiring import (
    NEG_INF,
    ExtReal,
    MpMatrix,
    MpVector,
    ScaledBasis,
    in_span,
    mp_dot,
    unit,
)


@dataclass(frozen=True)
class GeneratorSet:
    """Vectors spanning a subsemimodule, with optional provenance tags."""

    dimension: int
    vectors: tuple[MpVector, ...]
    origins: tuple[str, ...] | None = None

    def scaled_set(self) -> tuple[MpVector, ...]:
        """Distinct scaled forms of the generators, canonically sorted."""
        return tuple(sorted({v.scaled() for v in self.vectors}))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


class SystemRow(NamedTuple):
    """One inequality row: lower (x) <= upper (x)."""

    lower: MpVector
    upper: MpVector


@dataclass(frozen=True)
class TwoSidedSystem:
    """Finite system of one-sided rows lower_k (x) <= upper_k (x)."""

    dimension: int
    rows: tuple[SystemRow, ...]

    def __post_init__(self):
        for k, row in enumerate(self.rows):
            if len(row.lower) != self.dimension or len(row.upper) != self.dimension:
                raise ValueError(f"row {k} does not match dimension {self.dimension}")

    @classmethod
    def supereigen(cls, a: MpMatrix) -> "TwoSidedSystem":
        """The system x <= A (x), one row per matrix row."""
        n = len(a)
        return cls(n, tuple(SystemRow(unit(n, i), a.row(i)) for i in range(n)))

    def satisfied_by(self, x: MpVector) -> bool:
        return all(mp_dot(r.lower, x) <= mp_dot(r.upper, x) for r in self.rows)


def _cycle_generators(a: MpMatrix, cycle: Cycle) -> list[MpVector]:
    """One generator per rotation arc of the cycle.

    Generator j puts 0 at the anchor node and walks the cycle, paying back
    each arc weight; the cycle's total weight is credited once, on arc j.
    Crediting on the closing arc (j = t-1) yields the pure debt vector.
    """
    nodes = cycle.nodes
    t = len(nodes)
    out = []
    for j in range(t):
        entries: list[ExtReal] = [NEG_INF] * len(a)
        entries[nodes[0]] = 0
        val: ExtReal = 0
        for s in range(t - 1):
            credit = cycle.weight if s == j else 0
            val = val + credit - a.entry(nodes[s], nodes[s + 1])
            entries[nodes[s + 1]] = val
        out.append(MpVector(entries))
    return out


def _path_generators(
    a: MpMatrix, cycle: Cycle, cycle_gens: list[MpVector], path_nodes: tuple[int, ...]
) -> list[MpVector]:
    """One generator per step of a feeder path, walked from the cycle out.

    Starts from the cycle generator whose credited arc enters the path's
    endnode, then raises one path node at a time to the accumulated arc
    weight into the cycle.
    """
    nodes = cycle.nodes
    t = len(nodes)
    n = len(a)
    end = path_nodes[-1]
    x = cycle_gens[(nodes.index(end) - 1) % t]
    c = x[end]
    out = []
    for p in range(len(path_nodes) - 2, -1, -1):
        c = c + a.entry(path_nodes[p], path_nodes[p + 1])
        x = x.join(unit(n, path_nodes[p]).scale(c))
        out.append(x)
    return out


def cycle_path_generators(
    a: MpMatrix,
    *,
    cycles: list[Cycle] | None = None,
    max_cycles: int | None = DEFAULT_MAX_CYCLES,
) -> GeneratorSet:
    """Closed-form generating set of {x : A (x) >= x}.

    Every solution is a max-plus combination of these vectors.  The set is
    deliberately unfiltered; apply :func:`extremal_filter` to reduce it to
    the scaled basis.  Pass precomputed ``cycles`` to share enumeration
    work with other passes over the same matrix.
    """
    d = Digraph.from_matrix(a)
    if cycles is None:
        cycles = nonneg_elementary_cycles(d, max_cycles)
    vectors: list[MpVector] = []
    origins: list[str] = []

    def tag(kind: str, nodes: tuple[int, ...], k: int) -> str:
        shown = ",".join(str(v + 1) for v in nodes)
        return f"{kind} ({shown}) #{k}"

    for cycle in cycles:
        gens = _cycle_generators(a, cycle)
        vectors.extend(gens)
        origins.extend(tag("cycle", cycle.nodes, j) for j in range(len(gens)))
        for path in feeder_paths(d, cycle, max_cycles):
            steps = _path_generators(a, cycle, gens, path.nodes)
            vectors.extend(steps)
            origins.extend(tag("path", path.nodes, q) for q in range(len(steps)))
    return GeneratorSet(len(a), tuple(vectors), tuple(origins))


def double_description(system: TwoSidedSystem) -> GeneratorSet:
    """Generators of {x : lower (x) <= upper (x)} by row-wise intersection.

    Maintains generators of the cone cut out by the rows seen so far,
    beginning with the unit vectors (no rows).  For each row, satisfiers
    survive as they are; each satisfier/violator pair contributes the
    combination  (lower_k (w)) (v)  join  (upper_k (v)) (w),  which lands
    exactly on the row's boundary of feasibility.  Generators are kept in
    scaled deduplicated form after every row.
    """
    d = system.dimension
    current: list[MpVector] = sorted(unit(d, i) for i in range(d))
    for row in system.rows:
        scored = [(v, mp_dot(row.lower, v), mp_dot(row.upper, v)) for v in current]
        sat = [(v, lo, up) for (v, lo, up) in scored if lo <= up]
        vio = [(w, lo) for (w, lo, up) in scored if lo > up]
        new = [v for (v, _, _) in sat]
        for v, _, up_v in sat:
            for w, lo_w in vio:
                z = v.scale(lo_w).join(w.scale(up_v))
                if z.is_proper:
                    new.append(z)
        current = sorted({z.scaled() for z in new})
    return GeneratorSet(d, tuple(current))


def extremal_filter(gens: GeneratorSet | Iterable[MpVector]) -> ScaledBasis:
    """Reduce a generating set to its scaled extremals.

    A scaled generator is extremal exactly when it is not a combination of
    the other scaled generators, so one span test per distinct scaled
    vector suffices.  The result is the unique scaled basis of the spanned
    subsemimodule.
    """
    vectors = gens.vectors if isinstance(gens, GeneratorSet) else tuple(gens)
    scaled = sorted({v.scaled() for v in vectors})
    keep = [
        v for v in scaled if not in_span(v, [w for w in scaled if w != v])
    ]
    return ScaledBasis(keep)


def bases_equal(left: ScaledBasis, right: ScaledBasis) -> bool:
    """Set equality of canonical bases (canonical order makes it tuple equality)."""
    return tuple(left) == tuple(right)


class SpanOracle:
    """Extremality test against the closed-form generating set of a matrix.

    A scaled solution v is extremal exactly when it is not a combination
    of the other scaled generators; extremals belong to every scaled
    generating set, so testing against this particular one is conclusive.
    Callers guarantee v solves A (x) >= x and is scaled.  Verdicts are
    memoized; the search revisits the same scaled vectors often.
    """

    __slots__ = ("_gens", "_cache")

    def __init__(
        self,
        a: MpMatrix,
        *,
        cycles: list[Cycle] | None = None,
        max_cycles: int | None = DEFAULT_MAX_CYCLES,
    ):
        gens = cycle_path_generators(a, cycles=cycles, max_cycles=max_cycles)
        self._gens = gens.scaled_set()
        self._cache: dict[MpVector, bool] = {}

    def __call__(self, v: MpVector) -> bool:
        hit = self._cache.get(v)
        if hit is None:
            hit = not in_span(v, [w for w in self._gens if w != v])
            self._cache[v] = hit
        return hit
