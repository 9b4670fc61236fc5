"""
Splitting a game into symmetric, skew-symmetric and asymmetric parts
====================================================================

The three parts are mutually orthogonal and add up to the original game.
"""

from fractions import Fraction

import numpy as np

from gamedecomp import classify, decompose, from_payoff_tables, render_table, two_player_decompose

# V^c_1 = delta_8^3, V^c_2 = delta_8^6, V^c_3 = delta_8^7
g = from_payoff_tables(
    [
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
    ],
    name="input game",
)
dec = decompose(g)
print("X1 =", [str(x) for x in dec.x1])
print("X2 =", [str(x) for x in dec.x2])
for part in dec.games():
    print()
    print(render_table(part), end="")

# exact bookkeeping
print("\nsum of parts == input:", np.array_equal(dec.v_s + dec.v_k + dec.v_e, g.vector))
print("<S, K> =", dec.v_s.dot(dec.v_k), " <S, E> =", dec.v_s.dot(dec.v_e), " <K, E> =", dec.v_k.dot(dec.v_e))

report = classify(g)
print("squared norms:", {k: str(v) for k, v in report.norms.items()})

# two players: no asymmetric part, and a closed form
al, be, ga, de, xi, et, la, mu = 3, 1, 4, 1, 5, 9, 2, 6
bimatrix = from_payoff_tables([[al, ga, xi, la], [be, de, et, mu]], name="bimatrix")
two = two_player_decompose(bimatrix)
print("\nS =", [str(x) for x in two.v_s[:4]], " expected a =", Fraction(al + be, 2))
print("K =", [str(x) for x in two.v_k[:4]], " expected a' =", Fraction(al - be, 2))
print("asymmetric part zero:", not two.v_e.any())
print("closed form == projection:", two == decompose(bimatrix))
