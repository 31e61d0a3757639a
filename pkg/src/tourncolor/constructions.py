"""Tournament and graph generators, plus induced-pattern containment.

The recursive blow-up family, quadratic-residue tournaments, graph-orientation
tournaments, a high-girth random graph generator, and a backtracking search
for induced copies of one tournament inside another.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Graph,
    INFINITE_GIRTH,
    SplitMix64,
    Tournament,
    iter_bits,
)


def s_tournament(i: int) -> Tournament:
    """The i-th blow-up tournament on 2^i - 1 vertices.

    Level 1 is a single vertex.  Level i takes a directed triangle, keeps one
    corner as vertex 0, and replaces the other two corners with copies of
    level i-1: copy A on vertices 1..2^(i-1)-1, copy B on the rest, with all
    arcs 0 -> A, A -> B, B -> 0.  The labeling is fixed so certificates and
    traces are reproducible.
    """
    if i < 1:
        raise ValueError("blow-up index must be at least 1")
    if i == 1:
        return Tournament(1, (0,))
    sub = s_tournament(i - 1)
    m = sub.n
    n = 2 * m + 1
    copy_a = ((1 << m) - 1) << 1
    copy_b = ((1 << m) - 1) << (1 + m)
    rows = [copy_a] + [0] * (n - 1)
    for u in range(m):
        rows[1 + u] = (sub.rows[u] << 1) | copy_b
        rows[1 + m + u] = (sub.rows[u] << (1 + m)) | 1
    return Tournament(n, tuple(rows))


def orient_from_graph(G: Graph, ordering) -> Tournament:
    """Orient the complete graph using ``G`` as the forward-arc pattern.

    ``ordering`` is a permutation: new vertex i stands for G's vertex
    ordering[i].  For i < j, an edge between the represented vertices makes a
    forward arc i -> j; a non-edge makes the backward arc j -> i.
    """
    order = list(ordering)
    if sorted(order) != list(range(G.n)):
        raise ValueError("ordering must be a permutation of the graph's vertices")
    rows = [0] * G.n
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if G.adjacent(order[i], order[j]):
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Tournament(G.n, tuple(rows))


def girth(G: Graph):
    """Length of the shortest cycle, or INFINITE_GIRTH for forests.

    Breadth-first search from every vertex; a non-tree edge seen at depths
    d(u), d(w) closes a cycle of length at most d(u) + d(w) + 1, and the
    minimum over all roots is exact.
    """
    best = INFINITE_GIRTH
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in iter_bits(G.rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if length < best:
                        best = length
    return best


def _within_distance(rows: list[int], src: int, dst: int, cap: int) -> bool:
    """Is there a path of length <= cap from src to dst in the graph ``rows``?"""
    if src == dst:
        return True
    frontier = 1 << src
    seen = frontier
    for _ in range(cap):
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        nxt &= ~seen
        if nxt >> dst & 1:
            return True
        if not nxt:
            return False
        seen |= nxt
        frontier = nxt
    return False


def random_graph_with_girth(n: int, min_girth: int, target_edges: int, seed: int) -> Graph:
    """Random graph with girth at least ``min_girth``, greedily assembled.

    Shuffles all vertex pairs and keeps an edge only when the endpoints are
    currently at distance >= min_girth - 1, so the new cycle through it has
    length >= min_girth.  May return fewer than ``target_edges`` edges when
    the constraint exhausts the candidates.
    """
    if min_girth < 3:
        raise ValueError("minimum girth below 3 is meaningless for simple graphs")
    rng = SplitMix64(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    rows = [0] * n
    added = 0
    for u, v in pairs:
        if added >= target_edges:
            break
        if _within_distance(rows, u, v, min_girth - 2):
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        added += 1
    return Graph(n, tuple(rows))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def paley_tournament(q: int) -> Tournament:
    """Quadratic-residue tournament: arc i -> j iff j - i is a square mod q.

    Needs q prime with q = 3 (mod 4), which makes exactly one of +d, -d a
    residue for each d, so every pair gets exactly one arc.
    """
    if not _is_prime(q) or q % 4 != 3:
        raise ValueError("need a prime congruent to 3 modulo 4")
    residues = {x * x % q for x in range(1, q)}
    rows = [0] * q
    for i in range(q):
        for j in range(q):
            if i != j and (j - i) % q in residues:
                rows[i] |= 1 << j
    return Tournament(q, tuple(rows))


def petersen_graph() -> Graph:
    """The Petersen graph: outer 5-cycle, inner pentagram, five spokes."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return Graph.from_edges(10, edges)


@dataclass(frozen=True)
class PatternMatch:
    """Injective embedding: image[p] is the host vertex playing pattern vertex p."""

    image: tuple[int, ...]


def verify_pattern(T: Tournament, pattern: Tournament, match: PatternMatch) -> bool:
    """Arc-for-arc check that the image induces a copy of the pattern."""
    image = match.image
    if len(image) != pattern.n or len(set(image)) != pattern.n:
        return False
    if any(not 0 <= v < T.n for v in image):
        return False
    return all(
        T.arc(image[a], image[b]) == pattern.arc(a, b)
        for a in range(pattern.n)
        for b in range(pattern.n)
        if a != b
    )


def contains_pattern(T: Tournament, pattern: Tournament):
    """First induced copy of ``pattern`` in ``T``, or None if there is none.

    Backtracking over pattern vertices in a most-constrained-first order;
    a host vertex is only eligible when its global out- and in-degrees can
    accommodate the pattern vertex's degrees, and every arc to already-placed
    vertices must match.
    """
    p = pattern.n
    if p > T.n:
        raise ValueError("pattern larger than host")
    if p == 0:
        return PatternMatch(())
    host_out = [T.rows[v].bit_count() for v in range(T.n)]
    pat_out = [pattern.rows[u].bit_count() for u in range(p)]
    # most balanced pattern vertices first: they constrain the search hardest
    order = sorted(range(p), key=lambda u: (-min(pat_out[u], p - 1 - pat_out[u]), u))
    placed = [-1] * p
    used = 0

    def fits(u: int, v: int) -> bool:
        if host_out[v] < pat_out[u] or T.n - 1 - host_out[v] < p - 1 - pat_out[u]:
            return False
        for w in order:
            h = placed[w]
            if h < 0 or w == u:
                continue
            if pattern.arc(u, w) != T.arc(v, h):
                return False
        return True

    def rec(i: int) -> bool:
        nonlocal used
        if i == p:
            return True
        u = order[i]
        for v in range(T.n):
            if used >> v & 1 or not fits(u, v):
                continue
            placed[u] = v
            used |= 1 << v
            if rec(i + 1):
                return True
            placed[u] = -1
            used &= ~(1 << v)
        return False

    if rec(0):
        return PatternMatch(tuple(placed))
    return None
