"""Tournament and graph data types, set algebra, serialization, seeded generation.

Vertices are dense integers ``0..n-1``.  Every vertex set is a plain Python
int used as a bit vector (bit ``v`` set means vertex ``v`` is a member), so
union / intersection / difference are ``|``, ``&``, ``& ~`` and are exact at
any size.  A tournament stores one row bitmask per vertex: bit ``v`` of
``rows[u]`` means the arc ``u -> v`` is present.  Exactly one of ``u -> v``,
``v -> u`` holds for every pair of distinct vertices, so the in-neighborhood
is the complement of the out-neighborhood (minus the vertex itself).

All objects here are immutable after construction and safe to share between
threads.

Text format (``.trn``): line 1 is the decimal vertex count ``n``; the
remaining non-comment lines, concatenated, are exactly ``n*(n-1)/2``
characters from ``{0,1}`` giving the upper triangle in row-major pair order
``(0,1),(0,2),...,(0,n-1),(1,2),...``.  Character ``1`` for pair ``(i,j)``
means arc ``i -> j``, ``0`` means ``j -> i``.  Lines starting with ``#`` are
comments.  Graphs use the same layout with ``1`` meaning the undirected edge
``{i,j}``.
"""

from __future__ import annotations

import math
import os
from typing import Iterable, Iterator


# ---------------------------------------------------------------------------
# exact-solver size limits

DEFAULT_CHI_DP_THRESHOLD = 24   # subset-DP coloring path up to this many vertices
DEFAULT_CHI_EXACT_LIMIT = 30    # branch-and-bound coloring path up to this
DEFAULT_GAMMA_EXACT_LIMIT = 64  # exact minimum dominating set up to this

ENV_EXACT_LIMIT = "TOURNCOLOR_EXACT_LIMIT"


class ExactLimitExceeded(RuntimeError):
    """An exact solve was requested beyond the configured instance-size limit."""


def chi_exact_limit() -> int:
    value = os.environ.get(ENV_EXACT_LIMIT)
    return int(value) if value else DEFAULT_CHI_EXACT_LIMIT


def gamma_exact_limit() -> int:
    value = os.environ.get(ENV_EXACT_LIMIT)
    return int(value) if value else DEFAULT_GAMMA_EXACT_LIMIT


# ---------------------------------------------------------------------------
# vertex sets as int bitmasks

def vset(vertices: Iterable[int]) -> int:
    """Bitmask for an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise VertexRangeError(f"negative vertex {v}")
        mask |= 1 << v
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Vertices of a bitmask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------------------
# errors

class VertexRangeError(ValueError):
    """A vertex set refers to vertices outside the host's range."""


class FormatError(ValueError):
    """Base class for text-format parse errors."""


class MalformedHeaderError(FormatError):
    """The vertex-count line is missing or not a decimal number."""


class LengthMismatchError(FormatError):
    """The triangle string has the wrong number of characters."""


class InvalidCharacterError(FormatError):
    """The triangle string contains a character other than 0 or 1."""


# ---------------------------------------------------------------------------
# seeded generation

class SplitMix64:
    """Fixed 64-bit mixing generator (splitmix64).

    State advances by the 64-bit golden-ratio increment 0x9E3779B97F4B7C15;
    each output is the state mixed by
    ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``,
    ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``,
    ``z ^= z >> 31``, all mod 2^64.  Identical seeds give bit-identical
    streams on every platform, which is why this is pinned here instead of
    relying on a library default generator.
    """

    __slots__ = ("_state",)

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self.MASK

    def next_word(self) -> int:
        self._state = (self._state + 0x9E3779B97F4B7C15) & self.MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def bit_block(self, count: int) -> int:
        """``count`` pseudorandom bits packed LSB-first into one int.

        Bit ``p`` of the result is bit ``p % 64`` of the ``p // 64``-th word.
        """
        words = (count + 63) // 64
        block = 0
        for w in range(words):
            block |= self.next_word() << (64 * w)
        return block & ((1 << count) - 1)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection from 64-bit words."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            word = self.next_word()
            if word < limit:
                return word % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates, descending index order."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


# ---------------------------------------------------------------------------
# tournaments

def pair_index(i: int, j: int, n: int) -> int:
    """Position of pair (i, j), i < j, in row-major upper-triangle order."""
    return i * n - i * (i + 1) // 2 + (j - i - 1)


class Tournament:
    """Complete oriented graph on vertices ``0..n-1`` with row-bitmask arcs."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int], validate: bool = True):
        self.n = n
        self.rows = tuple(rows)
        if validate:
            self._validate()

    def _validate(self) -> None:
        n = self.n
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.rows) != n:
            raise ValueError(f"expected {n} rows, got {len(self.rows)}")
        full = full_mask(n)
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise VertexRangeError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(n):
            for v in range(u + 1, n):
                if (self.rows[u] >> v & 1) == (self.rows[v] >> u & 1):
                    raise ValueError(f"pair ({u},{v}) must have exactly one arc")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        rows = [0] * n
        for u, v in arcs:
            rows[u] |= 1 << v
        return cls(n, rows)

    def arc(self, u: int, v: int) -> bool:
        """True iff the arc ``u -> v`` is present."""
        return bool(self.rows[u] >> v & 1)

    def out_mask(self, u: int) -> int:
        return self.rows[u]

    def in_mask(self, u: int) -> int:
        return full_mask(self.n) & ~self.rows[u] & ~(1 << u)

    def out_degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tournament) and self.rows == other.rows and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Tournament(n={self.n})"


def check_subset(T: Tournament, mask: int) -> None:
    if mask < 0 or mask & ~full_mask(T.n):
        raise VertexRangeError(f"vertex set {bin(mask)} out of range for n={T.n}")


def induce(T: Tournament, subset: int) -> Tournament:
    """Subtournament on ``subset``, relabeled 0..k-1 in increasing original index."""
    check_subset(T, subset)
    order = members(subset)
    index = {v: k for k, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        rest = T.rows[v] & subset
        for w in iter_bits(rest):
            row |= 1 << index[w]
        rows.append(row)
    return Tournament(len(order), rows, validate=False)


def out_neighbors(T: Tournament, subset: int) -> int:
    """Union of out-neighborhoods of the vertices in ``subset`` (may meet it)."""
    check_subset(T, subset)
    mask = 0
    for v in iter_bits(subset):
        mask |= T.rows[v]
    return mask


def closed_out_neighbors(T: Tournament, subset: int) -> int:
    """``subset`` together with everything it beats."""
    return subset | out_neighbors(T, subset)


def is_transitive(T: Tournament, subset: int | None = None) -> bool:
    """True iff the (sub)tournament has no directed cycle.

    Checked via the degree criterion: a tournament on ``m`` vertices is
    acyclic iff its out-degrees are a permutation of ``0..m-1``.  (Any
    directed cycle in a tournament contains a directed triangle, and a
    triangle forces two equal out-degrees in the sorted sequence.)
    """
    if subset is None:
        subset = full_mask(T.n)
    else:
        check_subset(T, subset)
    seen = 0
    for v in iter_bits(subset):
        d = (T.rows[v] & subset).bit_count()
        if seen >> d & 1:
            return False
        seen |= 1 << d
    return True


def random_tournament(n: int, seed: int) -> Tournament:
    """Uniform tournament: one splitmix64 bit per pair, pairs in lexicographic order."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    pairs = n * (n - 1) // 2
    block = SplitMix64(seed).bit_block(pairs) if pairs else 0
    rows = [0] * n
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if block >> p & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            p += 1
    return Tournament(n, rows, validate=False)


# ---------------------------------------------------------------------------
# text format

def serialize(T: Tournament) -> str:
    bits = []
    for i in range(T.n):
        row = T.rows[i]
        for j in range(i + 1, T.n):
            bits.append("1" if row >> j & 1 else "0")
    return f"{T.n}\n{''.join(bits)}\n"


def _parse_lines(text: str) -> tuple[int, str]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedHeaderError("empty input")
    header = lines[0]
    if not header.isdigit():
        raise MalformedHeaderError(f"vertex count line is not a decimal number: {header!r}")
    n = int(header)
    body = "".join(lines[1:])
    bad = set(body) - {"0", "1"}
    if bad:
        raise InvalidCharacterError(f"triangle string has non-binary characters: {sorted(bad)}")
    expected = n * (n - 1) // 2
    if len(body) != expected:
        raise LengthMismatchError(
            f"triangle string has {len(body)} characters, expected {expected} for n={n}")
    return n, body


def parse(text: str) -> Tournament:
    """Inverse of :func:`serialize`; raises a distinct FormatError per defect."""
    n, body = _parse_lines(text)
    rows = [0] * n
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if body[p] == "1":
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            p += 1
    return Tournament(n, rows, validate=False)


# ---------------------------------------------------------------------------
# undirected graphs (orientation input and girth tools only)

class Graph:
    """Simple undirected graph as symmetric row bitmasks, no loops."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int], validate: bool = True):
        self.n = n
        self.rows = tuple(rows)
        if validate:
            self._validate()

    def _validate(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = full_mask(self.n)
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise VertexRangeError(f"row {u} has bits outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise ValueError(f"edge ({u},{v}) not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.rows == other.rows and self.n == other.n

    def __hash__(self) -> int:
        return hash(("graph", self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def serialize_graph(G: Graph) -> str:
    bits = []
    for i in range(G.n):
        row = G.rows[i]
        for j in range(i + 1, G.n):
            bits.append("1" if row >> j & 1 else "0")
    return f"{G.n}\n{''.join(bits)}\n"


def parse_graph(text: str) -> Graph:
    n, body = _parse_lines(text)
    rows = [0] * n
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if body[p] == "1":
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            p += 1
    return Graph(n, rows, validate=False)


INFINITE_GIRTH = math.inf
