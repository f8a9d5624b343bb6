"""
Nilpotent orbits from weighted Dynkin diagrams
==============================================

Every labeling in {0, 1, 2}^r defines a grading of g.  A labeling belongs
to a nilpotent orbit iff a generic e of degree 2 completes to an sl2-triple
with the matching h.
"""

from nilorbit.chevalley import build_algebra
from nilorbit.classify import enumerate_orbits, exact_triple, is_characteristic, stab_conditions
from nilorbit.grading import WeightedDiagram, grade

alg = build_algebra("G2")
for rec in enumerate_orbits(alg):
    print(rec.diagram, "dim", rec.dim_orbit, "height", rec.height)

# The grading of the height-3 orbit
gd = grade(alg, WeightedDiagram(alg.rs, (1, 0)))
print(gd.render())

# Exact sl2-triple over Q for that orbit
e, h, f = exact_triple(alg, gd.diagram)
print("[e, f] == h:", alg.bracket(e, f) == h)

# Classical types come with partitions
for rec in enumerate_orbits(build_algebra("D4")):
    print(rec.name(), rec.labels, rec.dim_orbit)

# The centraliser-dimension test alone is not enough: in A2 it accepts (2, 0),
# but no f completes the triple
a2 = build_algebra("A2")
d = WeightedDiagram(a2.rs, (2, 0))
print("stab test:", stab_conditions(a2, d), " characteristic:", is_characteristic(a2, d))
