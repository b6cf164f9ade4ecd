"""Constructive edge colourings of the complete symmetric digraph.

Two explicit families are provided.  The binary halving 2-colouring orients
each pair by the lowest binary digit in which the endpoints' residues differ,
so red paths must climb (and blue paths descend) the bit-reversal order of
residues.  The cube colourings sit on a partition of the vertices indexed by
a box of coordinates: within a class both directions take the top colour,
across classes the lexicographically ascending direction takes the top colour
and the descending direction takes the index of the first differing
coordinate, so colour-i paths strictly descend in coordinate i.  The
verifiers turn those defining facts into exact per-edge checks on a finite
materialisation.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, Sequence

from symdigraph.core import ColouredDigraph, InputError

__all__ = [
    "BLUE",
    "RED",
    "ColouringRule",
    "CubeSpec",
    "GeneratorSpec",
    "admissible_drop_colours",
    "binary_halving_rule",
    "cube_colouring_rule",
    "cube_pair_colour",
    "example4_rule",
    "make_chooser",
    "materialize",
    "parse_rule_spec",
    "round_robin_cube_spec",
    "slide_edge",
    "slide_pair",
    "verify_bit_reversal_monotone",
    "verify_lex_monotone",
]

RED = 1
BLUE = 2

Chooser = Callable[[tuple[int, ...], tuple[int, ...], tuple[int, ...]], int]


@dataclass(frozen=True)
class ColouringRule:
    """A stateless total colouring oracle on ordered pairs of distinct positive
    integers; materialise it to any finite prefix of the vertices."""

    colour_count: int
    rule: Callable[[int, int], int]
    description: str

    def __call__(self, u: int, v: int) -> int:
        if u < 1 or v < 1:
            raise InputError(f"vertices must be positive, got ({u}, {v})")
        if u == v:
            raise InputError(f"loop query ({u}, {v})")
        return self.rule(u, v)


@dataclass(frozen=True)
class CubeSpec:
    """Order vector plus a total vertex -> coordinate assignment.

    ``assign`` must map every positive integer to a tuple with ``0 <= value <
    ell[k]`` in each position k.
    """

    ell: tuple[int, ...]
    assign: Callable[[int], tuple[int, ...]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ell", tuple(int(l) for l in self.ell))
        if any(l < 1 for l in self.ell):
            raise InputError(f"every order entry must be at least 1, got {self.ell}")

    @property
    def r(self) -> int:
        return len(self.ell)

    @property
    def class_count(self) -> int:
        return math.prod(self.ell)

    def coords(self, v: int) -> tuple[int, ...]:
        """Validated coordinate vector of a vertex."""
        if v < 1:
            raise InputError(f"vertex must be positive, got {v}")
        c = tuple(self.assign(v))
        if len(c) != self.r or any(not 0 <= c[k] < self.ell[k] for k in range(self.r)):
            raise InputError(f"assignment {c} of vertex {v} is outside the box {self.ell}")
        return c

    def class_indices(self) -> Iterator[tuple[int, ...]]:
        """All coordinate tuples of the box, in lexicographic order."""
        return product(*(range(l) for l in self.ell))

    def members(self, index: Sequence[int], n: int) -> list[int]:
        idx = tuple(index)
        return [v for v in range(1, n + 1) if self.coords(v) == idx]


def binary_halving_rule() -> ColouringRule:
    """Red/blue rule on distinct positive integers: the endpoint whose lowest
    differing binary digit is 0 is the red tail, the other the red head."""

    def rule(m: int, n: int) -> int:
        low = (m ^ n) & -(m ^ n)
        return RED if m & low == 0 else BLUE

    return ColouringRule(2, rule, "binary")


def round_robin_cube_spec(ell: Sequence[int]) -> CubeSpec:
    """The canonical balanced assignment: vertex v gets the mixed-radix digits
    (most significant first) of (v - 1) mod prod(ell), so every class is a
    residue class and class counts in 1..n are balanced within 1."""
    ell = tuple(int(l) for l in ell)
    if any(l < 1 for l in ell):
        raise InputError(f"every order entry must be at least 1, got {ell}")
    period = math.prod(ell)

    @lru_cache(maxsize=None)
    def assign(v: int) -> tuple[int, ...]:
        x = (v - 1) % period
        digits = []
        for l in reversed(ell):
            x, d = divmod(x, l)
            digits.append(d)
        return tuple(reversed(digits))

    return CubeSpec(ell, assign)


def _first_difference(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """1-based index of the first differing coordinate (the tuples must differ)."""
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return k + 1
    raise InputError("coordinate tuples do not differ")


def cube_pair_colour(a: tuple[int, ...], b: tuple[int, ...], colour_count: int) -> int:
    """Cube-rule colour of an edge from a vertex with coordinates ``a`` to one
    with coordinates ``b``: top colour within a class and lexicographically
    forward, otherwise the first differing coordinate's index."""
    if a == b:
        return colour_count
    k = _first_difference(a, b)
    return colour_count if a[k - 1] < b[k - 1] else k


def slide_pair(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Slide-digraph membership for an ordered class pair: either exactly one
    coordinate differs and strictly drops, or every coordinate is <=."""
    diffs = [k for k, (x, y) in enumerate(zip(a, b)) if x != y]
    if len(diffs) == 1 and a[diffs[0]] > b[diffs[0]]:
        return True
    return all(x <= y for x, y in zip(a, b))


def admissible_drop_colours(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Colours whose coordinate strictly drops from ``a`` to ``b``."""
    return tuple(k + 1 for k, (x, y) in enumerate(zip(a, b)) if x > y)


def _cached_coords(spec: CubeSpec) -> Callable[[int], tuple[int, ...]]:
    @lru_cache(maxsize=None)
    def get(v: int) -> tuple[int, ...]:
        return spec.coords(v)

    return get


def cube_colouring_rule(spec: CubeSpec) -> ColouringRule:
    """The cube colouring over a coordinate assignment (r + 1 colours)."""
    get = _cached_coords(spec)
    top = spec.r + 1

    def rule(m: int, n: int) -> int:
        return cube_pair_colour(get(m), get(n), top)

    return ColouringRule(top, rule, f"cube {','.join(map(str, spec.ell))}")


def slide_edge(spec: CubeSpec, u: int, v: int) -> bool:
    """Whether the ordered pair (u, v) is an edge of the slide digraph."""
    if u == v:
        raise InputError(f"loop query ({u}, {v})")
    return slide_pair(spec.coords(u), spec.coords(v))


def make_chooser(name: str) -> Chooser:
    """Named deterministic pickers for off-slide class pairs: ``min``, ``max``
    or ``seed:N`` (a stateless hash-based pseudorandom pick)."""
    if name == "min":
        return lambda a, b, admissible: admissible[0]
    if name == "max":
        return lambda a, b, admissible: admissible[-1]
    if name.startswith("seed:"):
        try:
            seed = int(name.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad chooser seed in {name!r}") from None

        def pick(a: tuple[int, ...], b: tuple[int, ...], admissible: tuple[int, ...]) -> int:
            digest = zlib.crc32(f"{seed}|{a}|{b}".encode())
            return admissible[digest % len(admissible)]

        return pick
    raise InputError(f"unknown chooser {name!r} (expected min, max or seed:N)")


def example4_rule(spec: CubeSpec, chooser: str | Chooser = "min") -> ColouringRule:
    """Cube colouring with freely chosen drop colours on off-slide class pairs.

    On slide edges and within classes the rule agrees with the cube colouring;
    on each ordered class pair outside the slide digraph every edge takes the
    chooser's pick from the strictly dropping coordinates.  Needs r >= 2, the
    smallest box with off-slide pairs.
    """
    if spec.r < 2:
        raise InputError("off-slide class pairs require at least two coordinates")
    pick = chooser if callable(chooser) else make_chooser(chooser)
    get = _cached_coords(spec)
    top = spec.r + 1

    def rule(m: int, n: int) -> int:
        a, b = get(m), get(n)
        if a == b or slide_pair(a, b):
            return cube_pair_colour(a, b, top)
        admissible = admissible_drop_colours(a, b)
        c = pick(a, b, admissible)
        if c not in admissible:
            raise InputError(f"chooser picked inadmissible colour {c} for {a} -> {b}")
        return c

    tag = chooser if isinstance(chooser, str) else "custom"
    return ColouringRule(top, rule, f"example4 {','.join(map(str, spec.ell))} chooser={tag}")


def materialize(rule: ColouringRule, n: int) -> ColouredDigraph:
    """The complete symmetric digraph on 1..n coloured by the rule."""
    if n < 1:
        raise InputError(f"vertex count must be at least 1, got {n}")
    return ColouredDigraph.from_function(n, rule.colour_count, rule.rule)


def _bit_reversal_table(k: int) -> list[int]:
    size = 1 << k
    table = [0] * size
    for x in range(size):
        y = 0
        for b in range(k):
            y = (y << 1) | ((x >> b) & 1)
        table[x] = y
    return table


def verify_bit_reversal_monotone(g: ColouredDigraph, k: int) -> list[tuple[int, int]]:
    """Per-edge check of the binary halving invariant at modulus 2**k.

    With rho the bit-reversal order on residues mod 2**k, every red edge whose
    endpoints differ mod 2**k must strictly increase rho and every blue edge
    must strictly decrease it.  Returns the violating ordered pairs (empty on
    genuine binary halving materialisations).
    """
    if g.colour_count != 2:
        raise InputError(f"bit-reversal check expects 2 colours, digraph has {g.colour_count}")
    if k < 1:
        raise InputError(f"modulus exponent must be at least 1, got {k}")
    rho = _bit_reversal_table(k)
    mask = (1 << k) - 1
    rho_of = [0] + [rho[v & mask] for v in range(1, g.n + 1)]
    violations: list[tuple[int, int]] = []
    for u in range(1, g.n + 1):
        ru = rho_of[u]
        row = g.row(u)
        for i, c in enumerate(row):
            v = i + 1
            if v == u:
                continue
            rv = rho_of[v]
            if ru == rv:
                continue
            if (c == RED and ru > rv) or (c == BLUE and ru < rv):
                violations.append((u, v))
    return violations


def verify_lex_monotone(
    g: ColouredDigraph, spec: CubeSpec
) -> list[tuple[int, int, str]]:
    """Per-edge check of a colouring against a cube assignment.

    Top-colour edges between distinct classes must go lexicographically
    forward; a colour-i edge must keep coordinates before i equal and strictly
    drop coordinate i.  Violations carry a reason tag: ``top-colour-order``,
    ``prefix-mismatch`` or ``no-drop``.
    """
    if g.colour_count != spec.r + 1:
        raise InputError(
            f"digraph has {g.colour_count} colours but the box {spec.ell} needs {spec.r + 1}"
        )
    coords = [()] + [spec.coords(v) for v in range(1, g.n + 1)]
    top = g.colour_count
    violations: list[tuple[int, int, str]] = []
    for u in range(1, g.n + 1):
        a = coords[u]
        row = g.row(u)
        for i, c in enumerate(row):
            v = i + 1
            if v == u:
                continue
            b = coords[v]
            if c == top:
                if a != b and not a < b:
                    violations.append((u, v, "top-colour-order"))
            elif a[: c - 1] != b[: c - 1]:
                violations.append((u, v, "prefix-mismatch"))
            elif a[c - 1] <= b[c - 1]:
                violations.append((u, v, "no-drop"))
    return violations


@dataclass(frozen=True)
class GeneratorSpec:
    """A parsed generator-spec string together with its rule."""

    kind: str
    rule: ColouringRule
    cube: CubeSpec | None = None
    chooser: str | None = None


def _parse_ell(token: str) -> tuple[int, ...]:
    try:
        ell = tuple(int(p) for p in token.split(","))
    except ValueError:
        raise InputError(f"bad order vector {token!r} (expected e.g. 2,3)") from None
    if not ell:
        raise InputError("order vector must not be empty")
    return ell


def parse_rule_spec(text: str) -> GeneratorSpec:
    """Parse the generator-spec text format: ``binary``, ``cube l1,...,lr`` or
    ``example4 l1,...,lr chooser=<min|max|seed:N>``."""
    tokens = text.split()
    if not tokens:
        raise InputError("empty generator spec")
    kind = tokens[0]
    if kind == "binary":
        if len(tokens) != 1:
            raise InputError("the binary generator takes no parameters")
        return GeneratorSpec("binary", binary_halving_rule())
    if kind == "cube":
        if len(tokens) != 2:
            raise InputError("usage: cube l1,...,lr")
        spec = round_robin_cube_spec(_parse_ell(tokens[1]))
        return GeneratorSpec("cube", cube_colouring_rule(spec), cube=spec)
    if kind == "example4":
        if len(tokens) not in (2, 3):
            raise InputError("usage: example4 l1,...,lr [chooser=<min|max|seed:N>]")
        chooser = "min"
        if len(tokens) == 3:
            if not tokens[2].startswith("chooser="):
                raise InputError(f"unexpected token {tokens[2]!r} (expected chooser=...)")
            chooser = tokens[2].split("=", 1)[1]
        spec = round_robin_cube_spec(_parse_ell(tokens[1]))
        return GeneratorSpec(
            "example4", example4_rule(spec, chooser), cube=spec, chooser=chooser
        )
    raise InputError(f"unknown generator kind {kind!r} (expected binary, cube or example4)")
