"""Dichromatic number of tournaments: exact solvers, greedy bounds, certificates.

A coloring partitions a vertex set into classes, each of which must induce a
transitive (acyclic) subtournament.  The dichromatic number is the least
number of classes over all valid colorings.

Two exact engines, selected by instance size:

* subset dynamic programming (default up to 24 vertices): memoized top-down
  cover search over uncovered-remainder bitmasks.  For each remainder it is
  enough to branch on transitive subsets that contain the lowest uncovered
  vertex and are maximal within the remainder, since any class of an optimal
  cover can be grown to such a set.
* branch and bound (above the DP threshold): sequential class assignment
  seeded with the greedy upper bound and a disjoint-triangle-packing lower
  bound, fail-first vertex selection, forced-assignment propagation.

Both report the same exact value; only runtime differs.  Results never depend
on the thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from threading import Lock

from .core import (
    ExactLimitExceeded,
    Tournament,
    VertexRangeError,
    check_subset,
    chi_exact_limit,
    full_mask,
    is_transitive,
    iter_bits,
    members,
    DEFAULT_CHI_DP_THRESHOLD,
)


@dataclass(frozen=True)
class Coloring:
    """Disjoint vertex-set classes; the color of a vertex is its class index."""

    classes: tuple[int, ...]

    def covered(self) -> int:
        mask = 0
        for c in self.classes:
            mask |= c
        return mask

    def as_lists(self) -> list[list[int]]:
        return [list(members(c)) for c in self.classes]

    @classmethod
    def from_lists(cls, lists) -> "Coloring":
        out = []
        for item in lists:
            mask = 0
            for v in item:
                mask |= 1 << int(v)
            out.append(mask)
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.classes)


def verify_coloring(T: Tournament, target: int, coloring: Coloring) -> bool:
    """True iff the classes partition ``target`` and each induces a transitive set.

    A class reaching outside ``target`` raises :class:`VertexRangeError`; that
    is a malformed certificate, not merely an invalid one.
    """
    check_subset(T, target)
    seen = 0
    for c in coloring.classes:
        if c & ~target:
            raise VertexRangeError("coloring class outside the target set")
        if c & seen:
            return False
        seen |= c
    if seen != target:
        return False
    return all(is_transitive(T, c) for c in coloring.classes)


# ---------------------------------------------------------------------------
# transitive-set machinery

def insertable(T: Tournament, cls: int, v: int) -> bool:
    """Can ``v`` join the transitive class ``cls`` and keep it transitive?

    With P = members of cls beating v and S = members beaten by v, the class
    stays acyclic iff every vertex of P beats every vertex of S.
    """
    if not cls:
        return True
    rows = T.rows
    succ = cls & rows[v]
    pred = cls ^ succ
    if not pred or not succ:
        return True
    if succ.bit_count() <= pred.bit_count():
        return all(not pred & rows[b] for b in iter_bits(succ))
    return all(not succ & ~rows[a] for a in iter_bits(pred))


def maximal_transitive_sets(T: Tournament, mask: int, v: int):
    """Yield transitive subsets of ``mask`` containing ``v`` that are maximal
    within ``mask``, each exactly once, in depth-first lexicographic order."""
    verts = [u for u in iter_bits(mask) if u != v]
    count = len(verts)

    def rec(cls: int, idx: int):
        grew = False
        for i in range(idx, count):
            u = verts[i]
            if insertable(T, cls, u):
                yield from rec(cls | (1 << u), i + 1)
                grew = True
        if not grew:
            rest = mask & ~cls
            for u in iter_bits(rest):
                if insertable(T, cls, u):
                    return
            yield cls

    yield from rec(1 << v, 0)


def triangle_packing(T: Tournament, mask: int) -> int:
    """Number of vertex-disjoint directed triangles found by first-fit scan."""
    rows = T.rows
    rem = mask
    count = 0
    for u in members(mask):
        if not rem >> u & 1:
            continue
        for a in iter_bits(rows[u] & rem):
            # close the cycle u -> a -> b -> u
            back = rows[a] & rem & ~rows[u] & ~(1 << u) & ~(1 << a)
            if back:
                b = (back & -back).bit_length() - 1
                rem &= ~((1 << u) | (1 << a) | (1 << b))
                count += 1
                break
    return count


def greedy_coloring(T: Tournament, scope: int | None = None) -> Coloring:
    """Valid coloring by repeatedly stripping a maximal transitive set,
    grown greedily in ascending vertex order.  Class count >= the optimum."""
    if scope is None:
        scope = full_mask(T.n)
    check_subset(T, scope)
    classes = []
    rem = scope
    while rem:
        cls = 0
        for u in iter_bits(rem):
            if insertable(T, cls, u):
                cls |= 1 << u
        classes.append(cls)
        rem &= ~cls
    return Coloring(tuple(classes))


def _structural_lower_bound(T: Tournament, scope: int) -> tuple[int, int]:
    """(lower bound on the dichromatic number, upper bound on the longest
    transitive subset).  A packing of t disjoint triangles forces every
    transitive set to miss t vertices, so classes have size <= |scope| - t."""
    pc = scope.bit_count()
    if pc == 0:
        return 0, 0
    t = triangle_packing(T, scope)
    lts_ub = pc - t
    lb = max(1, 2 if t else 1, -(-pc // lts_ub))
    return lb, lts_ub


# ---------------------------------------------------------------------------
# subset-DP engine

class _DPSolver:
    def __init__(self, T: Tournament, scope: int):
        self.T = T
        self.scope = scope
        _, self.lts_ub = _structural_lower_bound(T, scope)
        self.memo_ok: dict[int, tuple[int, int]] = {}    # mask -> (budget, first class)
        self.memo_fail: dict[int, int] = {}              # mask -> highest failed budget

    def can_cover(self, mask: int, budget: int) -> bool:
        if not mask:
            return True
        if budget <= 0:
            return False
        pc = mask.bit_count()
        if pc <= budget:
            if mask not in self.memo_ok or pc < self.memo_ok[mask][0]:
                self._store_singletons(mask)
            return True
        ok = self.memo_ok.get(mask)
        if ok is not None and ok[0] <= budget:
            return True
        if self.memo_fail.get(mask, 0) >= budget:
            return False
        if pc > budget * self.lts_ub:
            self.memo_fail[mask] = max(self.memo_fail.get(mask, 0), budget)
            return False
        if is_transitive(self.T, mask):
            self.memo_ok[mask] = (1, mask)
            return True
        if budget == 1:
            self.memo_fail[mask] = max(self.memo_fail.get(mask, 0), 1)
            return False
        v = (mask & -mask).bit_length() - 1
        for cls in maximal_transitive_sets(self.T, mask, v):
            if self.can_cover(mask ^ cls, budget - 1):
                prev = self.memo_ok.get(mask)
                if prev is None or budget < prev[0]:
                    self.memo_ok[mask] = (budget, cls)
                return True
        self.memo_fail[mask] = max(self.memo_fail.get(mask, 0), budget)
        return False

    def _store_singletons(self, mask: int) -> None:
        while mask:
            pc = mask.bit_count()
            prev = self.memo_ok.get(mask)
            if prev is not None and prev[0] <= pc:
                break
            low = mask & -mask
            self.memo_ok[mask] = (pc, low)
            mask ^= low

    def reconstruct(self, mask: int) -> tuple[int, ...]:
        classes = []
        while mask:
            cls = self.memo_ok[mask][1]
            classes.append(cls)
            mask &= ~cls
        return tuple(classes)


def _solve_dp(T: Tournament, scope: int, canonical: bool) -> tuple[int, Coloring]:
    greedy = greedy_coloring(T, scope)
    lb, _ = _structural_lower_bound(T, scope)
    if len(greedy) <= lb:
        k = len(greedy)
        witness = greedy
    else:
        solver = _DPSolver(T, scope)
        k = lb
        while not solver.can_cover(scope, k):
            k += 1
        witness = Coloring(solver.reconstruct(scope))
    if canonical and k > 0:
        witness = _lex_min_coloring(T, scope, k)
    return k, witness


def _lex_min_coloring(T: Tournament, scope: int, k: int) -> Coloring:
    """Lexicographically least optimal coloring: minimize the per-vertex class
    index sequence (ascending vertices, classes numbered by first use)."""
    verts = members(scope)
    classes = [0] * k

    def dfs(i: int, used: int):
        if i == len(verts):
            return True
        v = verts[i]
        bit = 1 << v
        top = min(used + 1, k)
        for c in range(top):
            if c == used or insertable(T, classes[c], v):
                classes[c] |= bit
                if dfs(i + 1, used + (1 if c == used else 0)):
                    return True
                classes[c] &= ~bit
        return False

    if not dfs(0, 0):
        raise AssertionError("no coloring at the exact class count")
    return Coloring(tuple(c for c in classes if c))


# ---------------------------------------------------------------------------
# branch-and-bound engine

_PREFIX_DEPTH = {1: 1, 2: 9, 3: 6, 4: 5}


class _Aborted(Exception):
    pass


def _static_order(T: Tournament, scope: int) -> list[int]:
    # most balanced vertices first: they sit on the most triangles
    def key(v):
        out = (T.rows[v] & scope).bit_count()
        inn = scope.bit_count() - 1 - out
        return (-min(out, inn), v)

    return sorted(members(scope), key=key)


def _enumerate_prefix_items(T: Tournament, order: list[int], depth: int, k: int):
    """Canonical partial assignments of the first ``depth`` vertices to at most
    ``k`` transitive classes (classes numbered in first-use order)."""
    items: list[tuple[int, ...]] = []

    def rec(i: int, classes: tuple[int, ...]):
        if i == depth:
            items.append(classes)
            return
        v = order[i]
        bit = 1 << v
        for c, cls in enumerate(classes):
            if insertable(T, cls, v):
                rec(i + 1, classes[:c] + (cls | bit,) + classes[c + 1:])
        if len(classes) < k:
            rec(i + 1, classes + (bit,))

    rec(0, ())
    return items


def _complete_item(T: Tournament, scope: int, k: int, classes: tuple[int, ...],
                   stop_box=None, index: int = 0):
    """Depth-first completion with fail-first selection and unit propagation.
    Returns the full class tuple or None."""
    assigned = 0
    for c in classes:
        assigned |= c
    rows_count = 0

    def feasible_options(cls_list, used, v):
        opts = [c for c in range(used) if insertable(T, cls_list[c], v)]
        if used < k:
            opts.append(used)
        return opts

    def dfs(cls_list: list[int], uncolored: int):
        nonlocal rows_count
        if stop_box is not None:
            rows_count += 1
            if rows_count % 64 == 0 and stop_box[0] < index:
                raise _Aborted
        while True:
            if not uncolored:
                return list(cls_list)
            used = len(cls_list)
            best_v = -1
            best_opts = None
            forced = False
            for v in iter_bits(uncolored):
                opts = feasible_options(cls_list, used, v)
                if not opts:
                    return None
                if len(opts) == 1:
                    c = opts[0]
                    if c == used:
                        cls_list.append(1 << v)
                    else:
                        cls_list[c] |= 1 << v
                    uncolored &= ~(1 << v)
                    forced = True
                    break
                if best_opts is None or len(opts) < len(best_opts):
                    best_v, best_opts = v, opts
            if forced:
                continue
            bit = 1 << best_v
            for c in best_opts:
                child = list(cls_list)
                if c == len(child):
                    child.append(bit)
                else:
                    child[c] |= bit
                result = dfs(child, uncolored & ~bit)
                if result is not None:
                    return result
            return None

    return dfs(list(classes), scope & ~assigned)


def _bnb_can_color(T: Tournament, scope: int, k: int, threads: int):
    order = _static_order(T, scope)
    depth = min(len(order), _PREFIX_DEPTH.get(k, 4))
    items = _enumerate_prefix_items(T, order, depth, k)
    if threads <= 1 or len(items) <= 1:
        for item in items:
            result = _complete_item(T, scope, k, item)
            if result is not None:
                return result
        return None
    stop_box = [len(items)]
    lock = Lock()

    def run(i: int):
        if stop_box[0] < i:
            return None
        try:
            result = _complete_item(T, scope, k, items[i], stop_box, i)
        except _Aborted:
            return None
        if result is not None:
            with lock:
                if i < stop_box[0]:
                    stop_box[0] = i
        return result

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(run, range(len(items))))
    for result in results:
        if result is not None:
            return result
    return None


def _solve_bnb(T: Tournament, scope: int, threads: int) -> tuple[int, Coloring]:
    greedy = greedy_coloring(T, scope)
    lb, _ = _structural_lower_bound(T, scope)
    ub = len(greedy)
    for k in range(lb, ub):
        result = _bnb_can_color(T, scope, k, threads)
        if result is not None:
            classes = tuple(sorted((c for c in result if c), key=lambda c: c & -c))
            return k, Coloring(classes)
    return ub, greedy


# ---------------------------------------------------------------------------
# public entry points

def dichromatic_number_exact(
    T: Tournament,
    scope: int | None = None,
    *,
    dp_threshold: int = DEFAULT_CHI_DP_THRESHOLD,
    exact_limit: int | None = None,
    canonical: bool = False,
    threads: int = 1,
) -> tuple[int, Coloring]:
    """Exact dichromatic number of ``scope`` with a verifiable witness.

    Chooses the subset-DP engine up to ``dp_threshold`` vertices, branch and
    bound beyond; raises :class:`ExactLimitExceeded` past ``exact_limit``
    (callers wanting larger instances should use :func:`dichromatic_bounds`).
    ``canonical`` asks for the lexicographically least optimal coloring and is
    honored on the DP path.
    """
    if scope is None:
        scope = full_mask(T.n)
    check_subset(T, scope)
    limit = chi_exact_limit() if exact_limit is None else exact_limit
    pc = scope.bit_count()
    if pc > limit:
        raise ExactLimitExceeded(
            f"exact dichromatic number limited to {limit} vertices, got {pc}")
    if pc == 0:
        return 0, Coloring(())
    if pc <= dp_threshold:
        return _solve_dp(T, scope, canonical)
    return _solve_bnb(T, scope, threads)


def dichromatic_bounds(T: Tournament, scope: int | None = None) -> tuple[int, int, Coloring]:
    """(lower, upper, witness for the upper bound); exact value lies within."""
    if scope is None:
        scope = full_mask(T.n)
    check_subset(T, scope)
    if not scope:
        return 0, 0, Coloring(())
    greedy = greedy_coloring(T, scope)
    lb, _ = _structural_lower_bound(T, scope)
    return min(lb, len(greedy)), len(greedy), greedy
