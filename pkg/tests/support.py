"""Shared test data and independent brute-force oracles.

The oracles here deliberately avoid the production code paths: cycles come
from a plain recursive DFS rather than the library's enumerator, the cycle
mean is a maximum over explicit cycle weights rather than a recurrence, and
feeder-path maximality is checked by restricted reachability rather than by
the enumerator's leaf rule.  Agreement between the two sides is then
meaningful evidence.
"""

from __future__ import annotations

import random
from fractions import Fraction

from maxplus import ExtReal, MpMatrix, MpVector, NEG_INF, parse_matrix, parse_vector

EXAMPLE_TEXT = """\
-3 1 -inf -inf -inf
1 1 1 -inf -inf
-inf 0 -inf 2 -inf
1 -inf -5 -inf -7
-2 -2 -7 1 -inf
"""

# The ten scaled extremals of the running example, canonical order.
EXAMPLE_BASIS_TEXT = [
    "-inf 0 -inf -inf -inf",
    "-inf 0 -inf -inf -2",
    "-inf 0 -inf -9 -2",
    "-inf 0 0 -inf -inf",
    "-inf 0 0 -5 -inf",
    "-3 -4 0 -2 -inf",
    "-2 -3 -inf -1 0",
    "-1 -2 -inf 0 -inf",
    "0 -1 -inf -inf -inf",
    "0 -1 -inf -inf -2",
]


def example_matrix() -> MpMatrix:
    return parse_matrix(EXAMPLE_TEXT).matrix


def example_basis_vectors() -> list[MpVector]:
    return [parse_vector(s, 5) for s in EXAMPLE_BASIS_TEXT]


def rand_matrix(
    rng: random.Random,
    n: int,
    neg_inf_p: float = 0.5,
    lo: int = -5,
    hi: int = 5,
) -> MpMatrix:
    return MpMatrix.from_rows(
        [
            [
                NEG_INF if rng.random() < neg_inf_p else rng.randint(lo, hi)
                for _ in range(n)
            ]
            for _ in range(n)
        ]
    )


def rand_vector(
    rng: random.Random,
    n: int,
    neg_inf_p: float = 0.3,
    lo: int = -5,
    hi: int = 5,
) -> MpVector:
    return MpVector(
        NEG_INF if rng.random() < neg_inf_p else rng.randint(lo, hi)
        for _ in range(n)
    )


def brute_elementary_cycles(a: MpMatrix) -> list[tuple[int, ...]]:
    """Every elementary cycle, anchored at its smallest node.

    Plain DFS: grow paths from each start node over larger-numbered nodes
    only, closing back to the start.  Anchoring at the smallest node makes
    each rotation class appear exactly once.
    """
    n = len(a)
    found: list[tuple[int, ...]] = []

    def dfs(start: int, node: int, path: list[int], onpath: set[int]) -> None:
        for j in range(n):
            if a.entry(node, j) is NEG_INF:
                continue
            if j == start:
                found.append(tuple(path))
            elif j > start and j not in onpath:
                onpath.add(j)
                path.append(j)
                dfs(start, j, path, onpath)
                path.pop()
                onpath.discard(j)

    for s in range(n):
        dfs(s, s, [s], {s})
    return found


def brute_cycle_weight(a: MpMatrix, nodes: tuple[int, ...]) -> ExtReal:
    total: ExtReal = 0
    for k, u in enumerate(nodes):
        total = total + a.entry(u, nodes[(k + 1) % len(nodes)])
    return total


def brute_max_cycle_mean(a: MpMatrix) -> ExtReal:
    best: ExtReal = NEG_INF
    for nodes in brute_elementary_cycles(a):
        mean = Fraction(brute_cycle_weight(a, nodes), len(nodes))
        if mean > best:
            best = mean
    return best


def naive_apply(a: MpMatrix, x: MpVector) -> MpVector:
    """Matrix-vector product by explicit loops, no shared helpers."""
    n = len(a)
    out = []
    for i in range(n):
        acc: ExtReal = NEG_INF
        for j in range(n):
            aij = a.entry(i, j)
            if aij is NEG_INF or x[j] is NEG_INF:
                continue
            term = aij + x[j]
            if acc is NEG_INF or term > acc:
                acc = term
        out.append(acc)
    return MpVector(out)


def valid_feeder_path(
    a: MpMatrix, cycle_nodes: tuple[int, ...], path_nodes: tuple[int, ...]
) -> bool:
    """Definition check for maximal feeder paths, by restricted reachability.

    The path must be elementary with at least two nodes, follow arcs of the
    matrix digraph, touch the cycle's node set only at its final node, and
    be maximal: no node outside the cycle and the path can reach the path's
    first node through intermediate nodes that avoid both.
    """
    jset = set(cycle_nodes)
    m = len(path_nodes)
    if m < 2 or len(set(path_nodes)) != m:
        return False
    if path_nodes[-1] not in jset:
        return False
    if any(v in jset for v in path_nodes[:-1]):
        return False
    for u, v in zip(path_nodes, path_nodes[1:]):
        if a.entry(u, v) is NEG_INF:
            return False
    blocked = jset | set(path_nodes)
    head = path_nodes[0]
    n = len(a)
    for start in range(n):
        if start in blocked:
            continue
        # search from start over nodes outside blocked, arcs of the digraph
        seen = {start}
        frontier = [start]
        reachable = False
        while frontier and not reachable:
            u = frontier.pop()
            for v in range(n):
                if a.entry(u, v) is NEG_INF:
                    continue
                if v == head:
                    reachable = True
                    break
                if v not in blocked and v not in seen:
                    seen.add(v)
                    frontier.append(v)
        if reachable:
            return False
    return True


def brute_feeder_paths(
    a: MpMatrix, cycle_nodes: tuple[int, ...]
) -> set[tuple[int, ...]]:
    """All maximal feeder paths by exhaustive enumeration plus the checker."""
    jset = set(cycle_nodes)
    n = len(a)
    candidates: set[tuple[int, ...]] = set()

    def grow(seq: list[int]) -> None:
        head = seq[0]
        for u in range(n):
            if u in jset or u in seq:
                continue
            if a.entry(u, head) is NEG_INF:
                continue
            candidates.add((u, *seq))
            grow([u, *seq])

    for end in cycle_nodes:
        grow([end])
    return {p for p in candidates if valid_feeder_path(a, cycle_nodes, p)}


def mk(rows) -> MpMatrix:
    """Shorthand matrix builder for literal test data."""
    return MpMatrix.from_rows(rows)


NI = NEG_INF
