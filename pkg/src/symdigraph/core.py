"""Finite edge-coloured complete symmetric digraphs and exact path primitives.

Vertices are the integers 1..n and colours are the integers 1..colour_count,
the highest colour conventionally carrying the dense "clique" structure while
the lower colours are the restricted path colours.  Everything here is a pure
function of immutable inputs, so instances can be shared freely between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, TextIO

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "CertificateError",
    "ColouredDigraph",
    "DirectedPath",
    "InputError",
    "colour_of",
    "has_mono_path_of_length",
    "longest_mono_path_exact",
    "mono_subgraph",
    "prefix_density",
    "read_edge_list",
    "write_edge_list",
]

# Exact longest-simple-path search is exponential; refuse anything bigger.
DEFAULT_ORACLE_CAP = 20


class InputError(ValueError):
    """An argument or input file violates a documented precondition."""


class CertificateError(RuntimeError):
    """A computed certificate failed its own validity check (internal bug)."""


@dataclass(frozen=True)
class DirectedPath:
    """A simple directed path stored as its vertex sequence (never empty)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise InputError("a path must contain at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError(f"path visits a vertex twice: {self.vertices}")

    @property
    def length(self) -> int:
        """Number of edges, i.e. one less than the number of vertices."""
        return len(self.vertices) - 1

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def __str__(self) -> str:
        return "->".join(map(str, self.vertices))


class ColouredDigraph:
    """Complete symmetric digraph on 1..n with a total colouring of ordered pairs.

    The colour table is a flat row-major tuple (entry ``(u-1)*n + (v-1)`` is the
    colour of the edge ``(u, v)``; diagonal entries are 0 and unused).
    """

    __slots__ = ("n", "colour_count", "_flat")

    def __init__(self, n: int, colour_count: int, flat: Sequence[int]):
        if n < 1:
            raise InputError(f"vertex count must be at least 1, got {n}")
        if colour_count < 1:
            raise InputError(f"colour count must be at least 1, got {colour_count}")
        if len(flat) != n * n:
            raise InputError(f"colour table must have {n * n} entries, got {len(flat)}")
        flat = tuple(flat)
        for u in range(n):
            row = flat[u * n : (u + 1) * n]
            if row[u] != 0:
                raise InputError(f"loop ({u + 1}, {u + 1}) must stay uncoloured")
            rest = row[:u] + row[u + 1 :]
            if rest and (min(rest) < 1 or max(rest) > colour_count):
                for i, c in enumerate(row):
                    if i != u and not 1 <= c <= colour_count:
                        raise InputError(
                            f"colour {c!r} of edge ({u + 1}, {i + 1}) is outside 1..{colour_count}"
                        )
        self.n = n
        self.colour_count = colour_count
        self._flat = flat

    @classmethod
    def from_function(
        cls, n: int, colour_count: int, fn: Callable[[int, int], int]
    ) -> "ColouredDigraph":
        """Build the digraph by evaluating ``fn(u, v)`` on every ordered pair."""
        if n < 1:
            raise InputError(f"vertex count must be at least 1, got {n}")
        flat = [0] * (n * n)
        for u in range(1, n + 1):
            base = (u - 1) * n
            for v in range(1, n + 1):
                if v != u:
                    flat[base + v - 1] = fn(u, v)
        return cls(n, colour_count, flat)

    @classmethod
    def from_edge_colours(
        cls, n: int, colour_count: int, colours: Mapping[tuple[int, int], int]
    ) -> "ColouredDigraph":
        """Build from an explicit pair->colour mapping, which must be total."""
        flat = [0] * (n * n)
        for (u, v), c in colours.items():
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge ({u}, {v}) is outside 1..{n}")
            if u == v:
                raise InputError(f"loop ({u}, {v}) cannot be coloured")
            flat[(u - 1) * n + (v - 1)] = c
        if len(colours) != n * (n - 1):
            for u in range(1, n + 1):
                for v in range(1, n + 1):
                    if u != v and (u, v) not in colours:
                        raise InputError(f"no colour given for ordered pair ({u}, {v})")
        return cls(n, colour_count, flat)

    def colour(self, u: int, v: int) -> int:
        n = self.n
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"vertex pair ({u}, {v}) is outside 1..{n}")
        if u == v:
            raise InputError(f"loop query ({u}, {v})")
        return self._flat[(u - 1) * n + (v - 1)]

    def row(self, u: int) -> tuple[int, ...]:
        """Colours of all edges leaving ``u``, indexed by ``v - 1`` (0 at ``u`` itself)."""
        if not 1 <= u <= self.n:
            raise InputError(f"vertex {u} is outside 1..{self.n}")
        return self._flat[(u - 1) * self.n : u * self.n]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """All ordered pairs with their colours, in ascending (u, v) order."""
        n = self.n
        for u in range(1, n + 1):
            row = self._flat[(u - 1) * n : u * n]
            for i, c in enumerate(row):
                if i + 1 != u:
                    yield u, i + 1, c

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColouredDigraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.colour_count == other.colour_count
            and self._flat == other._flat
        )

    def __repr__(self) -> str:
        return f"ColouredDigraph(n={self.n}, colour_count={self.colour_count})"


def colour_of(g: ColouredDigraph, u: int, v: int) -> int:
    """Colour of the ordered pair (u, v); loops and out-of-range vertices are errors."""
    return g.colour(u, v)


def _check_colour(g: ColouredDigraph, colour: int) -> None:
    if not 1 <= colour <= g.colour_count:
        raise InputError(f"colour {colour} is outside 1..{g.colour_count}")


def _colour_adjacency(g: ColouredDigraph, colour: int) -> list[tuple[int, ...]]:
    """Out-neighbour lists (ascending) of one colour class, indexed by vertex."""
    adj: list[tuple[int, ...]] = [()] * (g.n + 1)
    for u in range(1, g.n + 1):
        row = g.row(u)
        adj[u] = tuple(i + 1 for i, c in enumerate(row) if c == colour)
    return adj


def mono_subgraph(g: ColouredDigraph, colour: int) -> set[tuple[int, int]]:
    """The set of ordered pairs carrying exactly the given colour."""
    _check_colour(g, colour)
    out: set[tuple[int, int]] = set()
    for u in range(1, g.n + 1):
        row = g.row(u)
        out.update((u, i + 1) for i, c in enumerate(row) if c == colour)
    return out


def has_mono_path_of_length(
    g: ColouredDigraph, colour: int, length: int
) -> DirectedPath | None:
    """Search for a simple directed path with exactly ``length`` edges in one colour.

    Depth-limited exhaustive DFS from every start vertex, exploring neighbours
    in ascending order; the first witness found (the lexicographically least
    one of that length) is returned, or None when no such path exists.  Cost is
    O(n * max_outdegree ** length) in the worst case.
    """
    _check_colour(g, colour)
    if length < 0:
        raise InputError(f"path length must be non-negative, got {length}")
    if length == 0:
        return DirectedPath((1,))
    if length > g.n - 1:
        return None
    adj = _colour_adjacency(g, colour)
    on_path = bytearray(g.n + 1)
    trail: list[int] = []

    def grow(v: int, remaining: int) -> bool:
        trail.append(v)
        on_path[v] = 1
        if remaining == 0:
            return True
        for w in adj[v]:
            if not on_path[w] and grow(w, remaining - 1):
                return True
        trail.pop()
        on_path[v] = 0
        return False

    for start in range(1, g.n + 1):
        if grow(start, length):
            return DirectedPath(tuple(trail))
    return None


def longest_mono_path_exact(
    g: ColouredDigraph, colour: int, max_n: int = DEFAULT_ORACLE_CAP
) -> DirectedPath:
    """Exact maximum-length simple directed path in one colour class.

    Exhaustive memoised search over (current vertex, visited set) states, so it
    is exponential in general and refuses digraphs with more than ``max_n``
    vertices.  Returns the lexicographically least maximum-length path, which
    makes the output deterministic and suitable for pinned regression values.
    """
    _check_colour(g, colour)
    if g.n > max_n:
        raise InputError(f"oracle scale exceeded: n={g.n} is over the cap {max_n}")
    adj = _colour_adjacency(g, colour)
    memo: dict[int, int] = {}

    def longest_from(v: int, used: int) -> int:
        key = (used << 5) | v
        cached = memo.get(key)
        if cached is not None:
            return cached
        best = 0
        for w in adj[v]:
            bit = 1 << w
            if not used & bit:
                cand = 1 + longest_from(w, used | bit)
                if cand > best:
                    best = cand
        memo[key] = best
        return best

    best_len = 0
    for v in range(1, g.n + 1):
        cand = longest_from(v, 1 << v)
        if cand > best_len:
            best_len = cand
    start = next(
        v for v in range(1, g.n + 1) if longest_from(v, 1 << v) == best_len
    )
    trail = [start]
    used = 1 << start
    remaining = best_len
    while remaining:
        for w in adj[trail[-1]]:
            bit = 1 << w
            if not used & bit and longest_from(w, used | bit) == remaining - 1:
                trail.append(w)
                used |= bit
                remaining -= 1
                break
        else:  # pragma: no cover - impossible if the memo is consistent
            raise CertificateError("witness reconstruction failed")
    return DirectedPath(tuple(trail))


def prefix_density(members: Iterable[int], n: int) -> Fraction:
    """|members intersected with 1..n| / n as an exact rational."""
    if n < 1:
        raise InputError(f"prefix length must be positive, got {n}")
    count = sum(1 for v in set(members) if 1 <= v <= n)
    return Fraction(count, n)


def write_edge_list(g: ColouredDigraph, out: TextIO) -> None:
    """Text edge-list format: header ``n colour_count``, then ``u v c`` lines
    for every ordered pair in ascending (u, v) order."""
    out.write(f"{g.n} {g.colour_count}\n")
    for u, v, c in g.edges():
        out.write(f"{u} {v} {c}\n")


def read_edge_list(inp: TextIO) -> ColouredDigraph:
    """Parse the edge-list format; pairs may come in any order but each ordered
    pair must appear exactly once."""
    header: tuple[int, int] | None = None
    colours: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(inp, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from None
        if header is None:
            if len(values) != 2:
                raise InputError(f"line {lineno}: header must be 'n colour_count'")
            header = (values[0], values[1])
            continue
        if len(values) != 3:
            raise InputError(f"line {lineno}: expected 'u v c', got {line!r}")
        u, v, c = values
        if (u, v) in colours:
            raise InputError(f"line {lineno}: duplicate edge ({u}, {v})")
        colours[(u, v)] = c
    if header is None:
        raise InputError("empty edge-list input")
    return ColouredDigraph.from_edge_colours(header[0], header[1], colours)
