"""Exact minimum set cover over clutters.

Branch and bound on bitmask edges: forced vertices (singleton edges) are
absorbed eagerly, the lower bound is a greedy packing of pairwise-disjoint
uncovered edges, and branching picks the most frequent vertex inside a
smallest uncovered edge.  Everything is deterministic, so repeated solves
yield identical witnesses, and an enumeration mode re-walks the tree with the
value pinned to the optimum to collect every optimal cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .clutters import Clutter, Hyperedge
from .graphs import bits, mask_of


@dataclass(frozen=True)
class CoverResult:
    value: int
    witness: frozenset[int]
    nodes_explored: int
    all_optima: tuple[frozenset[int], ...] | None = None
    truncated: bool = False


def greedy_cover(c: Clutter) -> frozenset[int]:
    """Max-coverage greedy cover, ties broken by lowest vertex index."""
    uncovered = list(c.edge_masks())
    if any(m == 0 for m in uncovered):
        raise ValueError("clutter has an empty edge")
    chosen = 0
    while uncovered:
        candidates = 0
        for m in uncovered:
            candidates |= m
        best_v, best_hits = -1, -1
        for v in bits(candidates):
            hits = sum(1 for m in uncovered if m >> v & 1)
            if hits > best_hits:
                best_v, best_hits = v, hits
        chosen |= 1 << best_v
        uncovered = [m for m in uncovered if not m >> best_v & 1]
    return frozenset(bits(chosen))


def _packing_bound(edges: list[int]) -> int:
    """Number of pairwise-disjoint edges picked greedily by ascending size."""
    used = 0
    count = 0
    for m in edges:
        if not m & used:
            used |= m
            count += 1
    return count


def _absorb_singletons(edges: list[int], selected: int) -> tuple[list[int], int, int] | None:
    """Select every singleton-edge vertex; None when an edge is uncoverable."""
    count = 0
    while True:
        forced = 0
        for m in edges:
            if m == 0:
                return None
            if m.bit_count() == 1:
                forced |= m
        if not forced:
            break
        selected |= forced
        count += forced.bit_count()
        edges = [m for m in edges if not m & forced]
    return edges, selected, count


def _branch_vertex(edges: list[int]) -> int:
    """Most frequent vertex within the first (smallest) edge, lowest index on ties."""
    e0 = edges[0]
    best_v, best_freq = -1, -1
    for v in bits(e0):
        freq = sum(1 for m in edges if m >> v & 1)
        if freq > best_freq:
            best_v, best_freq = v, freq
    return best_v


def min_cover(c: Clutter, enumerate_all: bool = False, cap: int = 10_000) -> CoverResult:
    """Exact minimum cover; with enumerate_all, every optimum up to cap."""
    base = sorted(set(c.edge_masks()), key=lambda m: (m.bit_count(), m))
    if not base:
        optima = (frozenset(),) if enumerate_all else None
        return CoverResult(0, frozenset(), 0, optima)
    if any(m == 0 for m in base):
        raise ValueError("clutter has an empty edge")

    greedy = mask_of(greedy_cover(c))
    state = {"best": greedy.bit_count(), "witness": greedy, "nodes": 0}

    def search(edges: list[int], selected: int, count: int) -> None:
        state["nodes"] += 1
        absorbed = _absorb_singletons(edges, selected)
        if absorbed is None:
            return
        edges, selected, extra = absorbed
        count += extra
        if not edges:
            if count < state["best"]:
                state["best"] = count
                state["witness"] = selected
            return
        edges.sort(key=lambda m: (m.bit_count(), m))
        if count + _packing_bound(edges) >= state["best"]:
            return
        v = _branch_vertex(edges)
        vbit = 1 << v
        search([m for m in edges if not m & vbit], selected | vbit, count + 1)
        search([m & ~vbit for m in edges], selected, count)

    search(list(base), 0, 0)
    value = state["best"]
    witness = state["witness"]
    for m in base:
        if not m & witness:
            raise AssertionError("solver returned a non-cover")

    optima_out: tuple[frozenset[int], ...] | None = None
    truncated = False
    if enumerate_all:
        optima: list[int] = []

        def enum(edges: list[int], selected: int, count: int) -> bool:
            state["nodes"] += 1
            absorbed = _absorb_singletons(edges, selected)
            if absorbed is None:
                return True
            edges, selected, extra = absorbed
            count += extra
            if count > value:
                return True
            if not edges:
                if count == value:
                    if len(optima) >= cap:
                        return False
                    optima.append(selected)
                return True
            edges.sort(key=lambda m: (m.bit_count(), m))
            if count + _packing_bound(edges) > value:
                return True
            v = _branch_vertex(edges)
            vbit = 1 << v
            if not enum([m for m in edges if not m & vbit], selected | vbit, count + 1):
                return False
            return enum([m & ~vbit for m in edges], selected, count)

        truncated = not enum(list(base), 0, 0)
        optima_out = tuple(frozenset(bits(m)) for m in sorted(optima))

    return CoverResult(value, frozenset(bits(witness)), state["nodes"], optima_out, truncated)


def tau_q_rose(n: int, q: int) -> int:
    """Covering number of the complete q-rose of order n: n - q + 1."""
    if not 2 <= q < n:
        raise ValueError("q-rose needs 2 <= q < n")
    return n - q + 1


def qrose_clutter(n: int, q: int) -> Clutter:
    """The complete q-rose materialized: every q-subset of {0..n-1}."""
    if not 2 <= q < n:
        raise ValueError("q-rose needs 2 <= q < n")
    edges = tuple(
        Hyperedge(mask_of(sub), (f"rose{sorted(sub)}",)) for sub in combinations(range(n), q)
    )
    return Clutter(n, edges)
