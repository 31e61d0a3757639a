"""
The blow-up chain, residue tournaments, and high-girth orientations
===================================================================

Three tournament families with controlled structure, plus the induced-copy
search used to keep hill climbs inside a pattern-free region.
"""

from tourncolor import (
    INFINITE_GIRTH,
    contains_pattern,
    dichromatic_number_exact,
    girth,
    orient_from_graph,
    paley_tournament,
    petersen_graph,
    random_graph_with_girth,
    s_tournament,
    verify_pattern,
)

# the recursive blow-up: level i doubles (plus one) the previous level and
# its dichromatic number climbs with i
for i in range(1, 5):
    T = s_tournament(i)
    chi, _ = dichromatic_number_exact(T)
    print(f"level {i}: {T.n:2d} vertices, chi = {chi}")

# quadratic-residue tournaments are arc-transitive; the 7-vertex one is the
# smallest with domination number 3
qr7 = paley_tournament(7)
print("QR7 out-neighborhood of 0:", [w for w in range(7) if qr7.arc(0, w)])

# girth by BFS: the Petersen graph famously has girth 5
print("petersen girth:", girth(petersen_graph()))
print("empty graph girth:", girth(random_graph_with_girth(6, 5, 0, 0)),
      "== INFINITE_GIRTH:", girth(random_graph_with_girth(6, 5, 0, 0)) == INFINITE_GIRTH)

# a denser graph kept at girth >= 8, then turned into a tournament: graph
# edges become forward arcs, everything else points backward
G = random_graph_with_girth(40, 8, 60, seed=7)
print(f"girth-8 graph: {G.edge_count()} edges, verified girth {girth(G)}")
T = orient_from_graph(G, range(40))

# small vertex sets in that orientation stay 2-colorable because any seven
# vertices induce a forest of the underlying graph
chi, _ = dichromatic_number_exact(T, 0b1111111)
print("chi of the first seven vertices:", chi)

# induced-pattern search: the triangle sits inside QR7, the level-3 blow-up
# does not (its top vertices want out-degree 4, QR7 is 3-regular)
match = contains_pattern(qr7, s_tournament(2))
print("triangle embeds at:", match.image)
assert verify_pattern(qr7, s_tournament(2), match)
print("level-3 blow-up in QR7:", contains_pattern(qr7, s_tournament(3)))
