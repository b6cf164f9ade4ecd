"""Recursive partition of a path-restricted colouring into top-colour cliques.

When no colour i admits a directed path of length ell[i], peeling the colours
from r downward with one longest-path layering per colour splits the vertices
into at most prod(ell) classes whose internal edges all carry colour r + 1.
Each class is certified by an exhaustive edge check, and the classes feed the
path covers and exact prefix-density reports below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from symdigraph.core import (
    CertificateError,
    ColouredDigraph,
    DirectedPath,
    InputError,
    has_mono_path_of_length,
    prefix_density,
)
from symdigraph.ghrv import layer, maximal_acyclic_subgraph

__all__ = [
    "CliquePartition",
    "DensityReport",
    "HypothesisViolation",
    "PathCover",
    "density_report",
    "format_partition",
    "format_path_cover",
    "partition",
    "path_cover",
]

Index = tuple[int, ...]


class HypothesisViolation(Exception):
    """The colouring admits a monochromatic directed path it must not have."""

    def __init__(self, colour: int, witness: DirectedPath):
        self.colour = colour
        self.witness = witness
        super().__init__(
            f"colour {colour} admits a directed path of length {witness.length}: {witness}"
        )


@dataclass
class CliquePartition:
    """Disjoint classes covering 1..n, indexed by the full coordinate box (some
    possibly empty), each certified a clique in the top colour."""

    ell: tuple[int, ...]
    classes: dict[Index, frozenset[int]]
    certified_colour: int

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def nonempty(self) -> list[tuple[Index, frozenset[int]]]:
        return [(idx, self.classes[idx]) for idx in sorted(self.classes) if self.classes[idx]]

    def index_of(self) -> dict[int, Index]:
        return {v: idx for idx, members in self.classes.items() for v in members}


@dataclass
class PathCover:
    """Vertex-disjoint monochromatic directed paths covering 1..n."""

    paths: tuple[DirectedPath, ...]

    def covered(self) -> set[int]:
        out: set[int] = set()
        for p in self.paths:
            out.update(p.vertices)
        return out


@dataclass
class DensityReport:
    """Exact per-class prefix densities at a fixed n, with the pigeonhole floor
    the maximum is guaranteed to beat."""

    n: int
    per_class: dict[Index, Fraction]
    max_index: Index
    max_density: Fraction
    bound: Fraction


def partition(g: ColouredDigraph, ell: Sequence[int]) -> CliquePartition:
    """Split 1..n into prod(ell) classes monochromatic in the top colour.

    The path hypothesis (no colour-i path of length ell[i]) is checked eagerly
    and violations raise HypothesisViolation with the witness path.  The
    recursion peels colour r first: its layering yields at most ell[r] layers
    free of colour-r edges, and each layer is split recursively on the colours
    below.  Empty layers are kept as empty classes so the output shape is
    always the full box.  A failed clique certificate raises CertificateError,
    which would indicate a bug rather than bad input.
    """
    ell = tuple(int(l) for l in ell)
    if any(l < 1 for l in ell):
        raise InputError(f"every path bound must be at least 1, got {ell}")
    r = len(ell)
    if g.colour_count != r + 1:
        raise InputError(
            f"order vector {ell} needs {r + 1} colours, digraph has {g.colour_count}"
        )
    for i in range(1, r + 1):
        witness = has_mono_path_of_length(g, i, ell[i - 1])
        if witness is not None:
            raise HypothesisViolation(i, witness)
    top = r + 1

    def split(verts: list[int], m: int) -> dict[Index, frozenset[int]]:
        if m == 0:
            return {(): frozenset(verts)}
        if not verts:
            return {
                idx: frozenset() for idx in product(*(range(l) for l in ell[:m]))
            }
        vset = set(verts)
        colour_edges: list[tuple[int, int]] = []
        for u in verts:
            row = g.row(u)
            colour_edges.extend(
                (u, i + 1) for i, c in enumerate(row) if c == m and (i + 1) in vset
            )
        kept = maximal_acyclic_subgraph(colour_edges)
        layering = layer(verts, colour_edges, kept)
        if len(layering.layers) > ell[m - 1]:
            raise CertificateError(
                f"colour {m} produced {len(layering.layers)} layers, over the bound {ell[m - 1]}"
            )
        out: dict[Index, frozenset[int]] = {}
        for j in range(ell[m - 1]):
            block = sorted(layering.layers[j]) if j < len(layering.layers) else []
            for prefix, members in split(block, m - 1).items():
                out[prefix + (j,)] = members
        return out

    classes = split(list(range(1, g.n + 1)), r)
    for idx in sorted(classes):
        members = sorted(classes[idx])
        for u in members:
            row = g.row(u)
            for v in members:
                if v != u and row[v - 1] != top:
                    raise CertificateError(
                        f"class {idx} is not a colour-{top} clique: "
                        f"edge ({u}, {v}) has colour {row[v - 1]}"
                    )
    return CliquePartition(ell, classes, top)


def path_cover(p: CliquePartition) -> PathCover:
    """One ascending-order directed path per nonempty class.

    Within-class pairs are bidirectionally the certified clique colour, so each
    path is monochromatic; empty classes emit no path.
    """
    paths = tuple(
        DirectedPath(tuple(sorted(members))) for _, members in p.nonempty()
    )
    return PathCover(paths)


def density_report(p: CliquePartition, n: int) -> DensityReport:
    """Exact prefix density of every class at n.

    Since the classes partition 1..n, the maximum is at least 1/prod(ell) and
    in particular beats the reported floor 1/prod(ell) - prod(ell)/n.
    """
    if n < 1:
        raise InputError(f"prefix length must be positive, got {n}")
    per = {idx: prefix_density(p.classes[idx], n) for idx in sorted(p.classes)}
    best = max(per.values())
    max_index = next(idx for idx in sorted(per) if per[idx] == best)
    count = p.class_count
    bound = Fraction(1, count) - Fraction(count, n)
    return DensityReport(n, per, max_index, best, bound)


def format_partition(p: CliquePartition) -> str:
    """Text format: one line per class, ``i1,...,ir: v1 v2 ...``."""
    lines = []
    for idx in sorted(p.classes):
        head = ",".join(map(str, idx))
        members = " ".join(map(str, sorted(p.classes[idx])))
        lines.append(f"{head}:" + (f" {members}" if members else ""))
    return "\n".join(lines)


def format_path_cover(cover: PathCover) -> str:
    """Text format: one line per path, vertices in order."""
    return "\n".join(" ".join(map(str, p.vertices)) for p in cover.paths)
