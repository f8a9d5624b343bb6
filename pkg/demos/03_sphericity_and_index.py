"""
Sphericity and the index of the centraliser
===========================================

An orbit is spherical when a Borel subalgebra has an open orbit in it.  We
test that by conjugating a generic e and comparing rank of ad(x) on b with
dim G.e, and compare with the height.
"""

from nilorbit.analysis import analyze_orbit, index_of_centralizer, is_spherical
from nilorbit.chevalley import build_algebra
from nilorbit.classify import cached_orbits

alg = build_algebra("B3")
for rec in cached_orbits("B3"):
    sph = is_spherical(alg, rec, seed=1)
    idx = index_of_centralizer(alg, rec) if rec.height <= 3 else "-"
    print(f"{rec.name():>12}  height {rec.height}  spherical {sph}  index {idx}")

# Full per-orbit report, including the odd-height checks
rec = next(r for r in cached_orbits("B3") if r.height == 3)
rep = analyze_orbit(alg, rec)
print(rep["z_graded_dims"], rep["odd_top_checks"]["ok"])
