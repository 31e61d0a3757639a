"""Brute-force oracles and shared fixtures for the test suite.

Everything here is implemented independently of the library's algorithms:
transitivity by direct triple enumeration, coloring by set-partition
enumeration, domination by subset enumeration.  Slow on purpose; only used
at sizes where exhaustive search is decisive.
"""

from functools import lru_cache
from itertools import combinations

from tourncolor import Tournament
from tourncolor.localglobal import (
    ExtractionBranch,
    ExtractionTrace,
    _extract_composite,
)


def all_tournaments(n: int):
    """Every labeled tournament on n vertices, one per orientation vector."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if code >> idx & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
        yield Tournament(n, tuple(rows), validate=False)


def cyclic_triples(T: Tournament, verts):
    for a, b, c in combinations(verts, 3):
        if T.arc(a, b) and T.arc(b, c) and T.arc(c, a):
            yield a, b, c
        elif T.arc(a, c) and T.arc(c, b) and T.arc(b, a):
            yield a, c, b


def has_triangle(T: Tournament, verts=None) -> bool:
    if verts is None:
        verts = range(T.n)
    return next(cyclic_triples(T, verts), None) is not None


def transitive_brute(T: Tournament, verts) -> bool:
    return not has_triangle(T, list(verts))


@lru_cache(maxsize=None)
def _partitions(n: int):
    """All set partitions of range(n) as tuples of vertex masks, sorted by
    block count so the first all-transitive hit gives the minimum."""
    parts = [[]]
    for v in range(n):
        grown = []
        for p in parts:
            for i in range(len(p)):
                grown.append(p[:i] + [p[i] | (1 << v)] + p[i + 1:])
            grown.append(p + [1 << v])
        parts = grown
    return sorted((tuple(p) for p in parts), key=len)


def brute_chi(T: Tournament, verts=None) -> int:
    """Minimum transitive partition size by exhaustive partition enumeration."""
    if verts is None:
        verts = list(range(T.n))
    else:
        verts = list(verts)
    if not verts:
        return 0
    trans = {}

    def block_ok(mask: int) -> bool:
        if mask not in trans:
            vs = [verts[i] for i in range(len(verts)) if mask >> i & 1]
            trans[mask] = transitive_brute(T, vs)
        return trans[mask]

    for partition in _partitions(len(verts)):
        if all(block_ok(b) for b in partition):
            return len(partition)
    raise AssertionError("singleton partition must always work")


def brute_gamma(T: Tournament, target=None) -> int:
    """Minimum dominating-set size by subset enumeration; candidates range
    over all vertices, membership counts as dominated."""
    if target is None:
        target = list(range(T.n))
    else:
        target = list(target)
    if not target:
        return 0
    for size in range(1, T.n + 1):
        for cand in combinations(range(T.n), size):
            chosen = set(cand)
            if all(v in chosen or any(T.arc(r, v) for r in chosen)
                   for v in target):
                return size
    raise AssertionError("the whole vertex set always dominates")


def brute_lex_min_coloring(T: Tournament, k: int):
    """Lexicographically least class-index string using exactly first-use
    numbering and at most k classes; None when impossible."""
    n = T.n
    best = None

    def ok(assign):
        by_class = {}
        for v, c in enumerate(assign):
            by_class.setdefault(c, []).append(v)
        return all(transitive_brute(T, vs) for vs in by_class.values())

    def rec(assign, used):
        nonlocal best
        if best is not None:
            return
        if len(assign) == n:
            if ok(assign):
                best = tuple(assign)
            return
        for c in range(min(used + 1, k)):
            assign.append(c)
            if ok(assign):
                rec(assign, used + (1 if c == used else 0))
            assign.pop()

    rec([], 0)
    return best


# ---------------------------------------------------------------------------
# the synthetic composite fixture

DOLL_W = tuple(range(12))
DOLL_A = (12, 13, 14)
DOLL_P = tuple(range(15, 25))


def doll_tournament() -> Tournament:
    """25 vertices in three camps: a transitive W (0..11), a triangle A
    (12..14), and a rotational part P (15..24), wired A -> W -> P -> A.

    A union W dominates everything, its lowest twelve members are exactly W,
    the part W misses is exactly A, and N+(S) minus N+(A) is exactly P for
    every subset S of W.  That makes the level-3 composite step run end to
    end at desk scale.  The domination claims of the real theorem are far
    out of reach here, so a validator must flag every branch's claim; all
    structural properties hold, including that the assembled set has
    dichromatic number 3.
    """
    rows = [0] * 25
    for u in DOLL_W:
        for v in DOLL_W:
            if u < v:
                rows[u] |= 1 << v
    rows[12] |= 1 << 13
    rows[13] |= 1 << 14
    rows[14] |= 1 << 12
    for i in range(10):
        p = 15 + i
        for d in range(1, 5):
            rows[p] |= 1 << (15 + (i + d) % 10)
        if i < 5:
            rows[p] |= 1 << (p + 5)
    for a in DOLL_A:
        for w in DOLL_W:
            rows[a] |= 1 << w
    for w in DOLL_W:
        for p in DOLL_P:
            rows[w] |= 1 << p
    for p in DOLL_P:
        for a in DOLL_A:
            rows[p] |= 1 << a
    return Tournament(25, tuple(rows))


def doll_dominating() -> int:
    return sum(1 << v for v in DOLL_W + DOLL_A)


def doll_trace() -> ExtractionTrace:
    return _extract_composite(doll_tournament(), 3, doll_dominating(),
                              "greedy", False)


# five tampered variants; each returns (tournament, trace, expected fragment)

def tamper_reversed_arc():
    """Flip one A -> W arc in the tournament so the trace's claim is false."""
    T = doll_tournament()
    rows = list(T.rows)
    rows[12] &= ~(1 << 0)
    rows[0] |= 1 << 12
    mutated = Tournament(25, tuple(rows), validate=False)
    return mutated, doll_trace(), "arc: an arc between A and W points from W into A"


def tamper_undersized_w():
    trace = doll_trace()
    shrunk = trace.w & ~(1 << 11)
    mutated = ExtractionTrace(
        k=trace.k, scope=trace.scope, aprime=trace.aprime,
        dominating=trace.dominating, dominating_mode=trace.dominating_mode,
        w=shrunk, a_trace=trace.a_trace, branches=trace.branches)
    return doll_tournament(), mutated, "size: W must have 12 vertices"


def tamper_branch_in_shadow():
    """Move a branch result onto a W vertex, which N+(A) always contains."""
    trace = doll_trace()
    first = trace.branches[0]
    bad_set = (first.trace.aprime & ~(1 << 21)) | (1 << 0)
    bad_leaf = ExtractionTrace(k=2, scope=first.trace.scope, aprime=bad_set)
    bad_branch = ExtractionBranch(first.subset, first.region, bad_leaf,
                                  first.skipped)
    mutated = ExtractionTrace(
        k=trace.k, scope=trace.scope, aprime=trace.aprime,
        dominating=trace.dominating, dominating_mode=trace.dominating_mode,
        w=trace.w, a_trace=trace.a_trace,
        branches=(bad_branch,) + trace.branches[1:])
    return doll_tournament(), mutated, "arc: branch result intersects N+(A)"


def tamper_wrong_a_size():
    trace = doll_trace()
    inner = trace.a_trace
    shrunk = ExtractionTrace(k=2, scope=inner.scope,
                             aprime=inner.aprime & ~(1 << 14))
    mutated = ExtractionTrace(
        k=trace.k, scope=trace.scope, aprime=trace.aprime,
        dominating=trace.dominating, dominating_mode=trace.dominating_mode,
        w=trace.w, a_trace=shrunk, branches=trace.branches)
    return doll_tournament(), mutated, "size: level-2 result must have 3 vertices"


def tamper_fabricated_gamma():
    """The untouched fixture: its branch domination claims are fabrications
    at this scale, and the validator must say so for every branch."""
    return doll_tournament(), doll_trace(), "gamma-claim: domination of N+(S)"


ALL_TAMPERS = (
    tamper_reversed_arc,
    tamper_undersized_w,
    tamper_branch_in_shadow,
    tamper_wrong_a_size,
    tamper_fabricated_gamma,
)
