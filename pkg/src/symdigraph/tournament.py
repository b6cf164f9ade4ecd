"""Spanning transitive tournaments inside spanning subgraphs of the complete
symmetric digraph.  A subgraph contains one exactly when its complement is
acyclic; the extraction peels complement sources, and a permutation brute
force serves as an independent oracle at toy scale."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable

from symdigraph.core import InputError

__all__ = [
    "TransitiveTournament",
    "brute_force_tournament_exists",
    "complement_acyclic",
    "extract_tournament",
]

Edge = tuple[int, int]

BRUTE_FORCE_CAP = 6


@dataclass(frozen=True)
class TransitiveTournament:
    """A linear order of 1..n; the edges are exactly the (earlier, later) pairs."""

    order: tuple[int, ...]

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def edges(self) -> set[Edge]:
        n = len(self.order)
        return {
            (self.order[i], self.order[j]) for i in range(n) for j in range(i + 1, n)
        }


def _validated(g_edges: Iterable[Edge], n: int) -> set[Edge]:
    if n < 1:
        raise InputError(f"vertex count must be at least 1, got {n}")
    edges = set(g_edges)
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge ({u}, {v}) is outside 1..{n}")
        if u == v:
            raise InputError(f"loops are not allowed, got ({u}, {v})")
    return edges


def complement_acyclic(
    g_edges: Iterable[Edge], n: int
) -> tuple[bool, tuple[int, ...] | None]:
    """Whether the complement (all ordered pairs not in the subgraph) has no
    directed cycle.  On failure returns a shortest witness cycle as a vertex
    tuple with the first vertex repeated at the end, e.g. (1, 2, 1).  The
    complement is never materialised; membership is computed on the fly."""
    edges = _validated(g_edges, n)

    def comp_neighbours(u: int) -> list[int]:
        return [v for v in range(1, n + 1) if v != u and (u, v) not in edges]

    indeg = [0] * (n + 1)
    for u in range(1, n + 1):
        for v in comp_neighbours(u):
            indeg[v] += 1
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        for v in comp_neighbours(u):
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if seen == n:
        return True, None

    best: tuple[int, ...] | None = None
    for s in range(1, n + 1):
        dist = {s: 0}
        parent: dict[int, int] = {}
        frontier = [s]
        while frontier:
            nxt: list[int] = []
            for u in frontier:
                if best is not None and dist[u] + 1 >= len(best) - 1:
                    continue
                for v in comp_neighbours(u):
                    if v == s:
                        cycle = [s]
                        w = u
                        back = []
                        while w != s:
                            back.append(w)
                            w = parent[w]
                        cycle.extend(reversed(back))
                        cycle.append(s)
                        if best is None or len(cycle) < len(best):
                            best = tuple(cycle)
                    elif v not in dist:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
            frontier = nxt
    return False, best


def extract_tournament(g_edges: Iterable[Edge], n: int) -> TransitiveTournament:
    """Spanning transitive tournament inside the subgraph via source peeling.

    Repeatedly take the smallest-id source of the complement among the
    remaining vertices; being a complement source it receives edges from all
    remaining vertices inside the subgraph, so it goes last in the order under
    construction.  Requires an acyclic complement (InputError with the witness
    cycle otherwise); the result is spanning, transitive and contained in the
    subgraph.
    """
    edges = _validated(g_edges, n)
    comp_indeg = {v: 0 for v in range(1, n + 1)}
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and (u, v) not in edges:
                comp_indeg[v] += 1
    active = set(range(1, n + 1))
    peeled: list[int] = []
    for _ in range(n):
        source = min((v for v in active if comp_indeg[v] == 0), default=None)
        if source is None:
            _, cycle = complement_acyclic(edges, n)
            raise InputError(f"complement contains a directed cycle: {cycle}")
        active.remove(source)
        peeled.append(source)
        for w in active:
            if (source, w) not in edges:
                comp_indeg[w] -= 1
    return TransitiveTournament(tuple(reversed(peeled)))


def brute_force_tournament_exists(
    g_edges: Iterable[Edge], n: int, max_n: int = BRUTE_FORCE_CAP
) -> bool:
    """Independent oracle: does some permutation induce a tournament entirely
    inside the subgraph?  Exhaustive over n! permutations, hence capped."""
    if n > max_n:
        raise InputError(f"oracle scale exceeded: n={n} is over the cap {max_n}")
    edges = _validated(g_edges, n)
    for perm in permutations(range(1, n + 1)):
        if all(
            (perm[i], perm[j]) in edges
            for i in range(n)
            for j in range(i + 1, n)
        ):
            return True
    return False
