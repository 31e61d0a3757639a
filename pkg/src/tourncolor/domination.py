"""Domination in tournaments, in the relative sense.

A set R dominates a target set X when every vertex of X \\ R has an
in-neighbor in R; membership in R counts as dominated, and R may use vertices
outside X.  The domination number of X is the least |R| over dominating R.
With X = V this is the usual domination number of the tournament.

The exact solver works on the equivalent set-cover instance whose columns are
closed out-neighborhoods restricted to X.  The greedy solver always lands
within ceil(log2(|X| + 1)) picks: the chosen vertex covers itself plus at
least half of the rest of the undominated part, so the undominated count at
least halves each round.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ExactLimitExceeded,
    Tournament,
    check_subset,
    closed_out_neighbors,
    full_mask,
    gamma_exact_limit,
    iter_bits,
    members,
)

# above this target size the cover search skips the visited-state table
MEMO_TARGET_LIMIT = 22


@dataclass(frozen=True)
class DominationWitness:
    """Certificate that ``dominators`` dominates ``target`` inside ``host``."""

    host: Tournament
    dominators: int
    target: int

    def size(self) -> int:
        return self.dominators.bit_count()

    def valid(self) -> bool:
        return verify_domination(self.host, self.target, self.dominators)


def verify_domination(T: Tournament, target: int, dominators: int) -> bool:
    """True iff every vertex of ``target`` is in ``dominators`` or beaten by one."""
    check_subset(T, target)
    check_subset(T, dominators)
    return not target & ~closed_out_neighbors(T, dominators)


def _cover_columns(T: Tournament, target: int) -> list[int]:
    # column u = the part of target that picking u dominates
    return [((1 << u) | T.rows[u]) & target for u in range(T.n)]


def greedy_dominating_set(T: Tournament, target: int | None = None) -> DominationWitness:
    """Max-coverage greedy dominating set for ``target`` (ties: lowest index).

    Coverage counts the candidate itself when it lies in the undominated part,
    which is what makes the halving argument (and the log bound) go through.
    """
    if target is None:
        target = full_mask(T.n)
    check_subset(T, target)
    columns = _cover_columns(T, target)
    chosen = 0
    uncovered = target
    while uncovered:
        best_u = -1
        best_gain = 0
        for u in range(T.n):
            gain = (columns[u] & uncovered).bit_count()
            if gain > best_gain:
                best_u, best_gain = u, gain
        chosen |= 1 << best_u
        uncovered &= ~columns[best_u]
    return DominationWitness(T, chosen, target)


def domination_number_exact(
    T: Tournament,
    target: int | None = None,
    *,
    exact_limit: int | None = None,
) -> tuple[int, DominationWitness]:
    """Exact domination number of ``target`` with a minimum witness.

    Branch and bound over the set-cover formulation: branch on the uncovered
    vertex with the fewest potential dominators, trying them in ascending
    order.  Raises :class:`ExactLimitExceeded` beyond the configured size.
    """
    if target is None:
        target = full_mask(T.n)
    check_subset(T, target)
    limit = gamma_exact_limit() if exact_limit is None else exact_limit
    if T.n > limit:
        raise ExactLimitExceeded(
            f"exact domination limited to {limit} vertices, got {T.n}")
    if not target:
        return 0, DominationWitness(T, 0, target)

    columns = _cover_columns(T, target)
    coverers = {e: [u for u in range(T.n) if columns[u] >> e & 1]
                for e in members(target)}
    greedy = greedy_dominating_set(T, target)
    best_size = greedy.size()
    best_mask = greedy.dominators
    use_memo = target.bit_count() <= MEMO_TARGET_LIMIT
    seen: dict[int, int] = {}

    def max_gain(uncovered: int) -> int:
        return max((columns[u] & uncovered).bit_count() for u in range(T.n))

    def rec(uncovered: int, chosen: int, count: int) -> None:
        nonlocal best_size, best_mask
        if not uncovered:
            if count < best_size:
                best_size, best_mask = count, chosen
            return
        if count + 1 >= best_size:
            return
        if use_memo:
            prev = seen.get(uncovered)
            if prev is not None and prev <= count:
                return
            seen[uncovered] = count
        need = -(-uncovered.bit_count() // max_gain(uncovered))
        if count + need >= best_size:
            return
        pivot = -1
        pivot_width = None
        for e in iter_bits(uncovered):
            width = len(coverers[e])
            if pivot_width is None or width < pivot_width:
                pivot, pivot_width = e, width
        for u in coverers[pivot]:
            rec(uncovered & ~columns[u], chosen | (1 << u), count + 1)

    rec(target, 0, 0)
    return best_size, DominationWitness(T, best_mask, target)


def domination_bounds(T: Tournament, target: int | None = None) -> tuple[int, int, DominationWitness]:
    """(lower, upper, greedy witness); the exact number lies within."""
    if target is None:
        target = full_mask(T.n)
    check_subset(T, target)
    if not target:
        return 0, 0, DominationWitness(T, 0, target)
    columns = _cover_columns(T, target)
    widest = max(col.bit_count() for col in columns)
    lower = -(-target.bit_count() // widest)
    greedy = greedy_dominating_set(T, target)
    return min(lower, greedy.size()), greedy.size(), greedy


def check_inequality_1(T: Tournament, subset: int) -> bool:
    """Exactly test that dominating the closed out-neighborhood of a set never
    needs more picks than the set has members (the set itself suffices)."""
    check_subset(T, subset)
    region = closed_out_neighbors(T, subset)
    g, _ = domination_number_exact(T, region)
    return g <= subset.bit_count()


def check_inequality_2(T: Tournament, first: int, second: int) -> bool:
    """Exactly test subadditivity: dominating ``second`` never costs more than
    dominating ``first`` plus dominating what is left of ``second``."""
    check_subset(T, first)
    check_subset(T, second)
    g_second, _ = domination_number_exact(T, second)
    g_first, _ = domination_number_exact(T, first)
    g_rest, _ = domination_number_exact(T, second & ~first)
    return g_second <= g_first + g_rest
