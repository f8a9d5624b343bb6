"""
The special height-3 orbit
==========================

When theta is a fundamental weight, the grading by h_theta has a Heisenberg
positive part.  The quartic F on g<1>_theta separates the dense orbit from
a hypersurface whose dense orbit has height 3.
"""

import numpy as np

from nilorbit import linalg
from nilorbit.chevalley import build_algebra
from nilorbit.special import (bigrading, find_O_element, find_O_element_structural, quartic_F,
                              special_orbit_diagram, theta_grading, theta_sample)

p = linalg.DEFAULT_PRIME
alg = build_algebra("F4")
tg = theta_grading(alg)
print("theta grading dims:", tg.dims())

x = theta_sample(alg, tg, p, np.random.default_rng(0), "generic")
print("F at a generic point:", quartic_F(alg, x, tg))

# Two independent ways to land in the special orbit
o1 = find_O_element(alg, p, seed=3)
o2 = find_O_element_structural(alg, p, seed=3)
print("line search:", o1.power_ranks, " diagram:", o2.power_ranks)
print("diagram:", special_orbit_diagram(alg.rs))

# The bigrading by (h, h_theta)
bg = bigrading(alg)
print(bg.matrix_text())
print(bg.hexagon_text())
