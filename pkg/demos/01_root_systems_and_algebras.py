"""
Root systems and Chevalley bases
================================

Build a root system, look at its highest root, then the Lie algebra with
integer structure constants.
"""

import numpy as np

from nilorbit import linalg
from nilorbit.chevalley import build_algebra, jacobi_pair_defects, killing_form
from nilorbit.rootsys import build_root_system, format_weight, to_fundamental_coords

rs = build_root_system("F4")
print(rs.stype, "has", len(rs.positive_roots), "positive roots")
print("highest root on the simple roots:", rs.theta.coeffs)

# theta is a fundamental weight here (internal numbering)
print("theta =", format_weight(to_fundamental_coords(rs, rs.theta.coords)))

# The algebra: basis is negative root vectors, then h_1..h_r, then positive ones
alg = build_algebra(rs)
print("dim g =", alg.dim)

# A bracket of two root vectors lands on a root vector with an integer constant
a, b = rs.simples[1], rs.simples[2]
x = alg.bracket(alg.e(a), alg.e(b))
print("[e_a2, e_a3] has support", [alg.labels[k] for k in x.support])

# Jacobi on every pair of basis elements, via ad[x, y] = [ad x, ad y]
print("Jacobi defects:", jacobi_pair_defects(alg))

# The Killing form is nondegenerate; K(h_theta, h_theta) = 4 * dual Coxeter number
G = alg.killing_gram
p = linalg.DEFAULT_PRIME
print("Killing Gram rank:", linalg.rank_mod(np.mod(G, p), p))
h = alg.h_root(rs.theta)
print("K(h_theta, h_theta) =", killing_form(alg, h, h))
