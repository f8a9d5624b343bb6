"""
Canonical strings of height-2 orbits
====================================

Greedy orthogonal maximal roots in Delta<2>, and the partial sums that
generate the weight monoid.
"""

from nilorbit.chevalley import build_algebra
from nilorbit.classify import cached_orbits
from nilorbit.covariants import table1_report

for t in ("C3", "D4", "E7"):
    alg = build_algebra(t)
    for rec in cached_orbits(t):
        if rec.height != 2:
            continue
        row = table1_report(alg, rec)
        print(t, rec.name("paper"), row["ucs"], row["generators_text"])

