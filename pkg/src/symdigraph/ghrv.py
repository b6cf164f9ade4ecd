"""Gallai-Hasse-Roy-Vitaver machinery: maximal acyclic subgraphs and the
longest-path layering they induce, which properly colours the underlying graph
with at most (longest path length + 1) classes."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from symdigraph.core import CertificateError, InputError

__all__ = [
    "Layering",
    "layer",
    "maximal_acyclic_subgraph",
    "verify_proper",
]

Edge = tuple[int, int]


@dataclass(frozen=True)
class Layering:
    """A maximal acyclic subgraph plus the layers U_0..U_k, where U_i holds the
    vertices whose longest path in the acyclic subgraph has length exactly i."""

    acyclic_edges: frozenset[Edge]
    layers: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.layers) - 1

    def layer_of(self) -> dict[int, int]:
        return {v: i for i, members in enumerate(self.layers) for v in members}


def _check_edges(edges: Iterable[Edge]) -> list[Edge]:
    out = []
    for u, v in edges:
        if u == v:
            raise InputError(f"loops are not allowed, got ({u}, {v})")
        out.append((u, v))
    return out


def _is_acyclic(edges: Sequence[Edge]) -> bool:
    adj: dict[int, list[int]] = {}
    indeg: dict[int, int] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        indeg[v] = indeg.get(v, 0) + 1
        indeg.setdefault(u, 0)
    queue = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in adj.get(v, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(indeg)


def _reaches(adj: dict[int, list[int]], src: int, dst: int) -> bool:
    stack = [src]
    seen = {src}
    while stack:
        v = stack.pop()
        if v == dst:
            return True
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def maximal_acyclic_subgraph(
    edges: Iterable[Edge], order: Sequence[Edge] | None = None
) -> list[Edge]:
    """Greedy maximal acyclic subgraph in the given edge order.

    Edges are added one at a time (default order: lexicographic) and an edge is
    kept exactly when it closes no directed cycle with the edges kept so far.
    The result depends only on the order, so a fixed order makes it fully
    deterministic.  When the whole input is already acyclic the greedy keeps
    everything, and that case is answered without incremental checks.
    """
    edge_list = _check_edges(edges)
    if order is None:
        seq = sorted(set(edge_list))
    else:
        seq = _check_edges(order)
        if len(seq) != len(set(seq)) or set(seq) != set(edge_list):
            raise InputError("order must enumerate exactly the edge set, once each")
    if _is_acyclic(seq):
        return seq
    adj: dict[int, list[int]] = {}
    kept: list[Edge] = []
    for u, v in seq:
        if not _reaches(adj, v, u):
            adj.setdefault(u, []).append(v)
            kept.append((u, v))
    return kept


def _topological_order(verts: Sequence[int], edges: Sequence[Edge]) -> list[int]:
    indeg = {v: 0 for v in verts}
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        indeg[v] += 1
    heap = [v for v in verts if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != len(verts):
        raise InputError("the supposedly acyclic edge set contains a directed cycle")
    return order


def layer(
    vertices: Iterable[int], edges: Iterable[Edge], acyclic: Iterable[Edge]
) -> Layering:
    """Bucket vertices by exact longest-path length inside the acyclic subgraph.

    The lengths come from dynamic programming over a topological order, exact
    in polynomial time precisely because the subgraph is acyclic (the general
    longest-path problem has no such shortcut).  Raises InputError when
    ``acyclic`` has a cycle, and CertificateError when some edge of ``edges``
    joins two vertices of the same layer, which happens exactly when
    ``acyclic`` is not maximal.
    """
    verts = sorted(set(vertices))
    if not verts:
        raise InputError("layering needs at least one vertex")
    vset = set(verts)
    edge_set = set(_check_edges(edges))
    acyc = list(dict.fromkeys(_check_edges(acyclic)))
    for u, v in edge_set:
        if u not in vset or v not in vset:
            raise InputError(f"edge ({u}, {v}) leaves the vertex set")
    if not set(acyc) <= edge_set:
        raise InputError("the acyclic subgraph must be a subset of the edge set")
    order = _topological_order(verts, acyc)
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in acyc:
        adj[u].append(v)
    longest = {v: 0 for v in verts}
    for v in reversed(order):
        best = 0
        for w in adj[v]:
            if longest[w] + 1 > best:
                best = longest[w] + 1
        longest[v] = best
    k = max(longest.values())
    buckets: list[set[int]] = [set() for _ in range(k + 1)]
    for v, length in longest.items():
        buckets[length].add(v)
    layering = Layering(frozenset(acyc), tuple(frozenset(b) for b in buckets))
    ok, violations = verify_proper(edge_set, layering)
    if not ok:
        raise CertificateError(
            f"edge {violations[0]} joins two vertices of one layer; "
            "the acyclic subgraph is not maximal"
        )
    return layering


def verify_proper(
    edges: Iterable[Edge], layering: Layering
) -> tuple[bool, list[Edge]]:
    """Check that no edge joins two vertices of the same layer (and that every
    endpoint is layered at all); returns (ok, violating edges)."""
    where = layering.layer_of()
    violations = []
    for u, v in edges:
        iu = where.get(u)
        iv = where.get(v)
        if iu is None or iv is None or iu == iv:
            violations.append((u, v))
    return (not violations, violations)
