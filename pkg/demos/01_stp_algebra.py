"""
The semi-tensor product in a few lines
======================================

The STP multiplies matrices whose inner dimensions do not agree by inflating
both factors with identity blocks up to the lcm of the inner dimensions.
Everything here is exact: entries are Python ints and Fractions.
"""

import numpy as np

from gamedecomp.stp import col_stack, delta, khatri_rao, rmatrix, row_stack, stp, swap_matrix

# a 1x2 row times a 4x1 column: t = lcm(2, 4) = 4, result is 2x1
a = rmatrix([[1, 2]])
b = rmatrix([[3], [4], [5], [6]])
print("a |x b =", stp(a, b).ravel())  # [13 16]

# products of basis columns enumerate profiles lexicographically
x = stp(delta(2, 2), delta(3, 1))
print("delta_2^2 |x delta_3^1 = delta_6^%d" % (np.flatnonzero(x.ravel())[0] + 1))

# swap matrices exchange the two factors of a product
w = swap_matrix(2, 3)
print("W_[2,3] =", w)
print("swapped:", np.array_equal(stp(w, x), stp(delta(3, 1), delta(2, 2))))

# logical matrices stay in index form under products
print("W_[2,3] |x W_[3,2] =", stp(w, swap_matrix(3, 2)))

# Khatri-Rao: column-wise STP
print("khatri_rao =", khatri_rao(w, w))

# stacking forms of a non-square matrix; V_C lists entries (column, row),
# so the swap that recovers V_R is W_[n,m]
m = rmatrix([[1, 2, 3], [4, 5, 6]])
print("V_R =", row_stack(m).ravel())
print("V_C =", col_stack(m).ravel())
print("W_[3,2] V_C =", stp(swap_matrix(3, 2), col_stack(m)).ravel())

# fractions are kept exact
half = rmatrix([["1/2", "1/3"]])
print("exact:", stp(half, rmatrix([[3], [6]])).ravel())
