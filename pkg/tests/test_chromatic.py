import random

import pytest

from tourncolor import (
    Coloring,
    ExactLimitExceeded,
    Tournament,
    VertexRangeError,
    dichromatic_bounds,
    dichromatic_number_exact,
    full_mask,
    greedy_coloring,
    insertable,
    is_transitive,
    iter_bits,
    maximal_transitive_sets,
    members,
    paley_tournament,
    random_tournament,
    triangle_packing,
    verify_coloring,
    vset,
)

from brute import all_tournaments, brute_chi, brute_lex_min_coloring, has_triangle

C3 = Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def transitive(n):
    return Tournament.from_arcs(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestVerifyColoring:
    def test_valid(self):
        assert verify_coloring(C3, 0b111, Coloring((0b011, 0b100)))

    def test_rejects_overlap_and_gap(self):
        assert not verify_coloring(C3, 0b111, Coloring((0b011, 0b110)))
        assert not verify_coloring(C3, 0b111, Coloring((0b011,)))

    def test_rejects_cyclic_class(self):
        assert not verify_coloring(C3, 0b111, Coloring((0b111,)))

    def test_class_outside_target_is_malformed(self):
        with pytest.raises(VertexRangeError):
            verify_coloring(C3, 0b011, Coloring((0b011, 0b100)))

    def test_empty(self):
        assert verify_coloring(C3, 0, Coloring(()))

    def test_list_roundtrip(self):
        c = Coloring((0b011, 0b100))
        assert Coloring.from_lists(c.as_lists()) == c


class TestInsertable:
    def test_brute_equivalence(self):
        rng = random.Random(52)
        for _ in range(200):
            n = rng.randrange(2, 9)
            T = random_tournament(n, rng.randrange(1 << 30))
            cls = 0
            for v in range(n):
                if rng.random() < 0.5:
                    cls |= 1 << v
            if not is_transitive(T, cls):
                continue
            v = rng.randrange(n)
            if cls >> v & 1:
                continue
            assert insertable(T, cls, v) == is_transitive(T, cls | (1 << v))


class TestMaximalTransitiveSets:
    def test_properties(self):
        rng = random.Random(53)
        for _ in range(40):
            n = rng.randrange(1, 8)
            T = random_tournament(n, rng.randrange(1 << 30))
            mask = full_mask(n)
            v = rng.randrange(n)
            found = list(maximal_transitive_sets(T, mask, v))
            assert found, "at least the greedy extension of {v} exists"
            assert len(set(found)) == len(found)
            for cls in found:
                assert cls >> v & 1
                assert is_transitive(T, cls)
                for u in iter_bits(mask & ~cls):
                    assert not insertable(T, cls, u)

    def test_exhaustive_cover(self):
        # every transitive set containing v extends to some enumerated one
        for T in all_tournaments(4):
            for v in range(4):
                maximal = list(maximal_transitive_sets(T, 0b1111, v))
                for sub in range(16):
                    if not (sub >> v & 1) or not is_transitive(T, sub):
                        continue
                    assert any(sub & m == sub for m in maximal)


class TestGreedyColoring:
    def test_always_valid(self):
        rng = random.Random(54)
        for _ in range(80):
            n = rng.randrange(0, 13)
            T = random_tournament(n, rng.randrange(1 << 30))
            scope = full_mask(n)
            coloring = greedy_coloring(T, scope)
            assert verify_coloring(T, scope, coloring)

    def test_scoped(self):
        scope = vset([0, 2])
        coloring = greedy_coloring(C3, scope)
        assert verify_coloring(C3, scope, coloring)
        assert len(coloring) == 1


class TestExact:
    def test_base_values(self):
        assert dichromatic_number_exact(C3)[0] == 2
        assert dichromatic_number_exact(transitive(6))[0] == 1
        assert dichromatic_number_exact(paley_tournament(7))[0] == 3
        assert dichromatic_number_exact(Tournament(1, (0,)))[0] == 1
        assert dichromatic_number_exact(Tournament(0, ()))[0] == 0
        assert dichromatic_number_exact(C3, 0) == (0, Coloring(()))

    def test_witness_is_valid_and_optimal_size(self):
        rng = random.Random(55)
        for _ in range(60):
            n = rng.randrange(1, 9)
            T = random_tournament(n, rng.randrange(1 << 30))
            chi, witness = dichromatic_number_exact(T)
            assert len(witness) == chi
            assert verify_coloring(T, full_mask(n), witness)

    def test_brute_equivalence_random(self):
        rng = random.Random(56)
        for _ in range(60):
            n = rng.randrange(1, 9)
            T = random_tournament(n, rng.randrange(1 << 30))
            assert dichromatic_number_exact(T)[0] == brute_chi(T)

    def test_brute_equivalence_scoped(self):
        rng = random.Random(57)
        for _ in range(60):
            n = rng.randrange(2, 9)
            T = random_tournament(n, rng.randrange(1 << 30))
            scope = rng.randrange(1 << n)
            chi, witness = dichromatic_number_exact(T, scope)
            assert chi == brute_chi(T, members(scope))
            assert verify_coloring(T, scope, witness)

    def test_engines_agree(self):
        rng = random.Random(58)
        for _ in range(12):
            n = rng.randrange(10, 15)
            T = random_tournament(n, rng.randrange(1 << 30))
            via_dp = dichromatic_number_exact(T, dp_threshold=30)
            via_bnb = dichromatic_number_exact(T, dp_threshold=1)
            assert via_dp[0] == via_bnb[0]
            assert verify_coloring(T, full_mask(n), via_bnb[1])

    def test_threads_do_not_change_anything(self):
        T = random_tournament(16, 60)
        runs = [dichromatic_number_exact(T, dp_threshold=1, threads=k)
                for k in (1, 4, 8)]
        assert runs[0] == runs[1] == runs[2]

    def test_canonical_is_lexicographically_least(self):
        rng = random.Random(61)
        for _ in range(25):
            n = rng.randrange(2, 8)
            T = random_tournament(n, rng.randrange(1 << 30))
            chi, witness = dichromatic_number_exact(T, canonical=True)
            reference = brute_lex_min_coloring(T, chi)
            built = [None] * n
            for idx, cls in enumerate(witness.classes):
                for v in members(cls):
                    built[v] = idx
            assert tuple(built) == reference

    def test_exact_limit(self):
        with pytest.raises(ExactLimitExceeded):
            dichromatic_number_exact(random_tournament(31, 1))
        # explicit override beats the default
        chi, _ = dichromatic_number_exact(random_tournament(8, 1),
                                          exact_limit=8)
        assert chi >= 1
        with pytest.raises(ExactLimitExceeded):
            dichromatic_number_exact(random_tournament(9, 1), exact_limit=8)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("TOURNCOLOR_EXACT_LIMIT", "5")
        with pytest.raises(ExactLimitExceeded):
            dichromatic_number_exact(random_tournament(6, 1))

    def test_monotone_under_subsets(self):
        rng = random.Random(62)
        for _ in range(30):
            n = rng.randrange(2, 9)
            T = random_tournament(n, rng.randrange(1 << 30))
            scope = rng.randrange(1 << n)
            sub = scope & rng.randrange(1 << n)
            assert dichromatic_number_exact(T, sub)[0] <= \
                dichromatic_number_exact(T, scope)[0]


class TestBoundsAndPacking:
    def test_bounds_sandwich_exact(self):
        rng = random.Random(63)
        for _ in range(50):
            n = rng.randrange(0, 11)
            T = random_tournament(n, rng.randrange(1 << 30))
            lo, hi, witness = dichromatic_bounds(T)
            assert lo <= hi
            if n:
                assert verify_coloring(T, full_mask(n), witness)
                chi, _ = dichromatic_number_exact(T)
                assert lo <= chi <= hi
                assert len(witness) == hi

    def test_greedy_never_beats_exact_at_twenty(self):
        rng = random.Random(65)
        for _ in range(10):
            T = random_tournament(20, rng.randrange(1 << 30))
            chi, _ = dichromatic_number_exact(T)
            assert len(greedy_coloring(T)) >= chi

    def test_packing_is_disjoint_and_real(self):
        rng = random.Random(64)
        for _ in range(40):
            n = rng.randrange(3, 12)
            T = random_tournament(n, rng.randrange(1 << 30))
            count = triangle_packing(T, full_mask(n))
            assert count >= 0
            assert 3 * count <= n
            if has_triangle(T):
                assert count >= 1
