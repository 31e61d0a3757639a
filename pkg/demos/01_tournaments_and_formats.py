"""
Tournaments, bitmask vertex sets, and the text format
=====================================================

A tournament is a complete graph with every edge given a direction.  The
library stores one as a tuple of row bitmasks: bit v of rows[u] means the
arc u -> v is present.  Vertex sets are plain ints throughout.
"""

from tourncolor import (
    Tournament,
    members,
    parse,
    random_tournament,
    serialize,
    vset,
)

# the directed triangle, built from an explicit arc list
c3 = Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
print("triangle rows:", [bin(r) for r in c3.rows])
print("0 beats 1:", c3.arc(0, 1), "| 1 beats 0:", c3.arc(1, 0))

# out- and in-neighborhoods come back as masks; members() unpacks them
print("N+(2) =", members(c3.out_mask(2)), " N-(2) =", members(c3.in_mask(2)))

# the text format: a header line with n, then the upper triangle row by row,
# '1' meaning the arc points from the lower-numbered vertex to the higher
text = serialize(c3)
print("serialized triangle:", repr(text))
assert parse(text) == c3

# comments survive parsing
annotated = "# the 3-cycle\n3\n101\n"
assert parse(annotated) == c3

# random tournaments are reproducible: the generator is a fixed 64-bit
# mixer, so the same seed gives the same tournament on every machine
a = random_tournament(9, seed=2024)
b = random_tournament(9, seed=2024)
assert a == b
print("seed 2024, n=9:", repr(serialize(a)))

# masks compose with ordinary bit operations
evens = vset([0, 2, 4, 6, 8])
beaten_by_evens = 0
for v in members(evens):
    beaten_by_evens |= a.out_mask(v)
print("vertices some even vertex beats:", members(beaten_by_evens))
