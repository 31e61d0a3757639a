"""
Dominating sets: exact, greedy, and two workhorse inequalities
==============================================================

A set R dominates X when every vertex of X is in R or beaten by some
member of R.  The domination number gamma is the smallest such R; the
relative version lets R recruit vertices outside X.
"""

import math

from tourncolor import (
    check_inequality_1,
    check_inequality_2,
    domination_number_exact,
    greedy_dominating_set,
    members,
    paley_tournament,
    random_tournament,
    verify_domination,
    vset,
)

qr7 = paley_tournament(7)
g, witness = domination_number_exact(qr7)
print("gamma(QR7) =", g, "witness:", members(witness.dominators))
assert verify_domination(qr7, witness.target, witness.dominators)

# relative domination: dominate {1, 2} inside the triangle from outside it
g_rel, w_rel = domination_number_exact(paley_tournament(3), vset([1, 2]))
print("gamma of {1,2} in the triangle:", g_rel,
      "using", members(w_rel.dominators))

# the greedy set halves the undominated part each round, so its size is
# logarithmic; here on a 500-vertex random tournament
T = random_tournament(500, seed=3)
w = greedy_dominating_set(T)
print(f"n=500: greedy dominating set of {w.size()} vertices "
      f"(log bound {math.ceil(math.log2(501))})")
assert w.valid()

# inequality one: dominating the closed out-neighborhood of X never costs
# more than |X| (X itself does the job)
T = random_tournament(12, seed=8)
assert check_inequality_1(T, vset([0, 3, 7]))

# inequality two: gamma is subadditive across a split of the target
assert check_inequality_2(T, first=vset([0, 1, 2, 3]),
                          second=vset([2, 3, 4, 5, 6]))
print("both inequalities hold on the sampled instances")
