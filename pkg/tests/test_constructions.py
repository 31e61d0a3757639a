import itertools
import random

import pytest

from tourncolor import (
    Graph,
    INFINITE_GIRTH,
    PatternMatch,
    Tournament,
    contains_pattern,
    dichromatic_number_exact,
    domination_number_exact,
    girth,
    greedy_coloring,
    is_transitive,
    orient_from_graph,
    paley_tournament,
    petersen_graph,
    random_graph_with_girth,
    random_tournament,
    s_tournament,
    verify_pattern,
)

from brute import brute_chi

C3 = Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def complement(G):
    return Graph.from_edges(G.n, [
        (u, v) for u in range(G.n) for v in range(u + 1, G.n)
        if not G.adjacent(u, v)])


class TestBlowUps:
    def test_sizes(self):
        for i in range(1, 11):
            assert s_tournament(i).n == 2 ** i - 1

    def test_level_one_is_a_point(self):
        assert s_tournament(1) == Tournament(1, (0,))

    def test_level_two_is_the_triangle(self):
        assert s_tournament(2) == C3

    def test_level_three_layout(self):
        # corner 0, triangle copies on 1..3 and 4..6, cyclic corner arcs
        expected = Tournament.from_arcs(7, [
            (0, 1), (0, 2), (0, 3),
            (1, 2), (2, 3), (3, 1),
            (4, 5), (5, 6), (6, 4),
            (1, 4), (1, 5), (1, 6),
            (2, 4), (2, 5), (2, 6),
            (3, 4), (3, 5), (3, 6),
            (4, 0), (5, 0), (6, 0),
        ])
        assert s_tournament(3) == expected

    def test_chromatic_climbs_with_level(self):
        assert dichromatic_number_exact(s_tournament(1))[0] == 1
        assert dichromatic_number_exact(s_tournament(2))[0] == 2
        chi3 = dichromatic_number_exact(s_tournament(3))[0]
        assert chi3 == brute_chi(s_tournament(3))
        assert chi3 >= 3

    def test_rejects_level_zero(self):
        with pytest.raises(ValueError):
            s_tournament(0)


class TestOrientation:
    def test_edgeless_graph_gives_transitive(self):
        G = Graph.from_edges(6, [])
        T = orient_from_graph(G, range(6))
        assert is_transitive(T)

    def test_complete_graph_gives_transitive(self):
        G = Graph.from_edges(5, itertools.combinations(range(5), 2))
        T = orient_from_graph(G, range(5))
        assert is_transitive(T)
        assert T.arc(0, 4)

    def test_five_cycle_oracle(self):
        G = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        T = orient_from_graph(G, range(5))
        expected = {0: [1, 4], 1: [2], 2: [0, 3], 3: [0, 1, 4], 4: [1, 2]}
        for v, outs in expected.items():
            got = [w for w in range(5) if T.arc(v, w)]
            assert got == outs
        assert dichromatic_number_exact(T)[0] == 2
        assert domination_number_exact(T)[0] == 2

    def test_ordering_relabels(self):
        G = Graph.from_edges(4, [(0, 1), (1, 2)])
        T = orient_from_graph(G, [2, 1, 0, 3])
        # new 0 is old 2, new 1 is old 1: edge, so forward arc
        assert T.arc(0, 1)
        # new 0 is old 2, new 2 is old 0: non-edge, so backward arc
        assert T.arc(2, 0)

    def test_rejects_non_permutation(self):
        G = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(ValueError):
            orient_from_graph(G, [0, 1, 1])
        with pytest.raises(ValueError):
            orient_from_graph(G, [0, 1])

    def test_complement_reverses_all_arcs(self):
        rng = random.Random(80)
        for _ in range(20):
            n = rng.randrange(2, 9)
            edges = [p for p in itertools.combinations(range(n), 2)
                     if rng.random() < 0.5]
            G = Graph.from_edges(n, edges)
            T = orient_from_graph(G, range(n))
            R = orient_from_graph(complement(G), range(n))
            for u in range(n):
                for v in range(n):
                    if u != v:
                        assert T.arc(u, v) == R.arc(v, u)


class TestGirth:
    def test_triangle(self):
        assert girth(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])) == 3

    def test_forest_is_infinite(self):
        path = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        assert girth(path) == INFINITE_GIRTH
        assert girth(Graph.from_edges(3, [])) == INFINITE_GIRTH

    def test_five_cycle(self):
        G = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        assert girth(G) == 5

    def test_petersen(self):
        P = petersen_graph()
        assert P.n == 10
        assert P.edge_count() == 15
        assert girth(P) == 5

    def test_chorded_cycle(self):
        G = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
                                 (0, 5), (0, 3)])
        assert girth(G) == 4


class TestHighGirthGenerator:
    def test_girth_respected(self):
        rng = random.Random(81)
        for _ in range(10):
            n = rng.randrange(8, 30)
            g = rng.randrange(4, 8)
            G = random_graph_with_girth(n, g, 3 * n, rng.randrange(1 << 30))
            assert girth(G) >= g

    def test_deterministic(self):
        a = random_graph_with_girth(25, 6, 40, 17)
        b = random_graph_with_girth(25, 6, 40, 17)
        assert a.rows == b.rows

    def test_edge_budget(self):
        G = random_graph_with_girth(20, 5, 7, 3)
        assert G.edge_count() <= 7

    def test_rejects_tiny_girth(self):
        with pytest.raises(ValueError):
            random_graph_with_girth(10, 2, 5, 0)


class TestPaley:
    def test_smallest_is_the_triangle(self):
        assert paley_tournament(3) == C3

    def test_seven(self):
        T = paley_tournament(7)
        # residues mod 7 are {1, 2, 4}
        assert [w for w in range(7) if T.arc(0, w)] == [1, 2, 4]
        assert all(T.out_degree(v) == 3 for v in range(7))

    def test_eleven_is_regular(self):
        T = paley_tournament(11)
        assert all(T.out_degree(v) == 5 for v in range(11))

    def test_rotational_symmetry(self):
        T = paley_tournament(11)
        for i in range(11):
            for j in range(11):
                if i != j:
                    assert T.arc(i, j) == T.arc((i + 1) % 11, (j + 1) % 11)

    def test_rejects_bad_moduli(self):
        for q in (4, 5, 9, 15, 1):
            with pytest.raises(ValueError):
                paley_tournament(q)


class TestPatternContainment:
    def test_verify_accepts_identity(self):
        T = paley_tournament(7)
        assert verify_pattern(T, T, PatternMatch(tuple(range(7))))

    def test_verify_negatives(self):
        T = paley_tournament(7)
        assert not verify_pattern(T, C3, PatternMatch((0, 1)))
        assert not verify_pattern(T, C3, PatternMatch((0, 0, 1)))
        assert not verify_pattern(T, C3, PatternMatch((0, 1, 9)))
        # 0 -> 1 -> 2 but 0 -> 2 in the host: not a directed triangle
        assert not verify_pattern(T, C3, PatternMatch((0, 1, 2)))

    def test_triangle_in_paley(self):
        T = paley_tournament(7)
        match = contains_pattern(T, C3)
        assert match.image == (0, 1, 3)
        assert verify_pattern(T, C3, match)

    def test_transitive_has_no_triangle(self):
        T = Tournament.from_arcs(6, [(i, j) for i in range(6)
                                     for j in range(i + 1, 6)])
        assert contains_pattern(T, C3) is None

    def test_blowup_not_in_paley(self):
        # every level-3 copy needs out-degree 4; the 7-vertex residue
        # tournament is 3-regular
        assert contains_pattern(paley_tournament(7), s_tournament(3)) is None

    def test_pattern_larger_than_host(self):
        with pytest.raises(ValueError):
            contains_pattern(C3, paley_tournament(7))

    def test_empty_pattern(self):
        match = contains_pattern(C3, Tournament(0, ()))
        assert match.image == ()

    def test_brute_equivalence(self):
        rng = random.Random(82)
        for _ in range(40):
            hn = rng.randrange(1, 7)
            pn = rng.randrange(1, min(hn, 4) + 1)
            host = random_tournament(hn, rng.randrange(1 << 30))
            pattern = random_tournament(pn, rng.randrange(1 << 30))
            found = contains_pattern(host, pattern)
            exists = any(
                verify_pattern(host, pattern, PatternMatch(perm))
                for perm in itertools.permutations(range(hn), pn))
            if found is None:
                assert not exists
            else:
                assert exists
                assert verify_pattern(host, pattern, found)

    def test_greedy_coloring_of_blowup_is_usable(self):
        T = s_tournament(4)
        coloring = greedy_coloring(T)
        assert coloring.covered() == (1 << 15) - 1
