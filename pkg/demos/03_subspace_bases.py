"""
Bases of the symmetric and skew-symmetric subspaces
===================================================

Rows of D span the skew-symmetric games, rows of E the symmetric ones.  Their
Gram matrices are diagonal, which makes projection a per-row division.
"""

import math

import numpy as np

from gamedecomp import build_B, build_D, build_E, build_H, dims

d = dims(3, 2)
print(f"G_[3;2]: ell={d.ell} beta={d.beta} p={d.p} alpha={d.alpha} dimE={d.dim_e} q={d.q}")

print("B =\n", build_B(3, 2).rows)
print("H =\n", build_H(3, 2).rows)

# player 1's block, then the swap-matrix extensions for players 2 and 3
print("D row 1 =", build_D(3, 2).rows[0])

# dimension table
print("\n n kappa  beta alpha dimE")
for n in range(2, 6):
    for kappa in range(2, 5):
        if kappa**n > 4096:
            continue
        dm = dims(n, kappa)
        print(f"{n:2d} {kappa:5d} {dm.beta:5d} {dm.alpha:5d} {dm.dim_e:5d}")

# Gram matrices: D D^T = n! I, E E^T = diag(n q_i), D E^T = 0
for n, kappa in [(3, 2), (3, 3), (4, 3)]:
    D, E = build_D(n, kappa), build_E(n, kappa)
    dd = np.array_equal(D.gram(), math.factorial(n) * np.eye(len(D), dtype=int))
    de = not np.any(D.rows.dot(E.rows.T))
    print(f"({n},{kappa}): DD^T = {math.factorial(n)}I {dd}, DE^T = 0 {de}, diag(EE^T) = {np.diag(E.gram())[:6]}...")
