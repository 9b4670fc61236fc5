"""
Is a game symmetric or skew-symmetric?
======================================

Two independent routes give the answer: brute force over every player
permutation, and swap-matrix conditions on player 1's payoff row.  A third
route checks invariance under the representation psi(sigma).
"""

from gamedecomp import (
    FiniteGame,
    GameSpec,
    from_payoff_tables,
    is_invariant_psi,
    is_skew_def,
    is_skew_thm,
    is_symmetric_def,
    is_symmetric_thm,
    is_zero_sum,
    render_table,
)

# three players, two strategies; columns are 111, 112, 121, ..., 222
g, h = 1, 2
skew = from_payoff_tables(
    [
        [0, g, -g, 0, 0, h, -h, 0],
        [0, -g, 0, -h, g, 0, h, 0],
        [0, 0, g, h, -g, -h, 0, 0],
    ],
    name="skew-symmetric game",
)
print(render_table(skew, precision=1))
print("skew by definition:", bool(is_skew_def(skew)))
print("skew by swap matrices:", is_skew_thm(skew))
print("psi-invariant:", is_invariant_psi(skew))
print("zero-sum:", is_zero_sum(skew))  # n = kappa + 1 forces this

# a symmetric game: payoffs depend only on own strategy and the others' multiset
a, b, c, d, e, f = 1, 2, 3, 4, 5, 6
sym = from_payoff_tables(
    [
        [a, b, b, d, c, e, e, f],
        [a, b, c, e, b, d, e, f],
        [a, c, b, e, b, e, d, f],
    ],
    name="symmetric game",
)
print("\nsymmetric:", bool(is_symmetric_def(sym)), is_symmetric_thm(sym))

# break it and ask for a counterexample
broken = FiniteGame(sym.spec, [[a, b, b, d, c, e, e, f], [a, b, c, e, b, d, e, f],
                               [a, c, b, e, b, e, d, 99]])
check = is_symmetric_def(broken)
print("broken game symmetric:", bool(check))
print("first violation:", check.witness)

# with four players and two strategies, only the zero game is skew-symmetric
print("\nzero game in G_[4;2] is skew:", bool(is_skew_def(FiniteGame.zero(GameSpec(4, 2)))))
