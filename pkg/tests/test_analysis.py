import pytest

from nilorbit import linalg
from nilorbit.analysis import (analyze_orbit, borel_orbit_dim, centralizer_basis,
                               check_centralizer_structure, check_odd_top, generic_triple,
                               index_of_centralizer, is_spherical, orbit_dim, theorem_suite)
from nilorbit.chevalley import build_algebra
from nilorbit.classify import cached_orbits

P = linalg.DEFAULT_PRIME


@pytest.mark.parametrize("t", ["A3", "A4", "A5"])
def test_sphericity_type_a_partitions(t):
    # in sl_n an orbit is spherical iff its partition has parts <= 2
    alg = build_algebra(t)
    for rec in cached_orbits(t):
        assert is_spherical(alg, rec) == (rec.partition[0] <= 2), rec.partition


@pytest.mark.parametrize("t", ["A3", "A4"])
def test_index_is_rank_for_all_sl_orbits(t):
    alg = build_algebra(t)
    for rec in cached_orbits(t):
        assert index_of_centralizer(alg, rec) == alg.rank


def test_regular_orbit_centraliser_is_abelian_of_rank_dimension():
    alg = build_algebra("G2")
    rec = cached_orbits("G2")[-1]
    t = generic_triple(alg, rec, P, __import__("numpy").random.default_rng(0))
    z = centralizer_basis(alg, t.e)
    assert len(z) == 2
    assert alg.bracket(z[0], z[1]).is_zero()
    assert orbit_dim(alg, t.e) == 12


def test_borel_dim_bounded_by_orbit_dim():
    import numpy as np
    alg = build_algebra("B3")
    rng = np.random.default_rng(1)
    for rec in cached_orbits("B3"):
        t = generic_triple(alg, rec, P, rng)
        assert borel_orbit_dim(alg, t.e) <= rec.dim_orbit


@pytest.mark.parametrize("t", ["B3", "C3", "G2", "D4"])
def test_centraliser_structure(t):
    alg = build_algebra(t)
    for rec in cached_orbits(t):
        res = check_centralizer_structure(alg, rec)
        assert res["ok"], res["failures"]


def test_odd_top_on_height_three():
    alg = build_algebra("F4")
    tested = 0
    for rec in cached_orbits("F4"):
        if rec.height % 2:
            rep = check_odd_top(alg, rec)
            assert rep.ok, rep.to_json()
            tested += 1
    assert tested


def test_odd_top_rejects_even_height():
    alg = build_algebra("A2")
    with pytest.raises(Exception):
        check_odd_top(alg, cached_orbits("A2")[0])


def test_theorem_suite_f4():
    alg = build_algebra("F4")
    rep = theorem_suite(alg, cached_orbits("F4"), seeds=(0, 1))
    assert rep["ok"], rep["failures"]


def test_analyze_report_fields():
    alg = build_algebra("G2")
    rep = analyze_orbit(alg, cached_orbits("G2")[1])
    for key in ("diagram", "dim", "height", "spherical", "index", "z_graded_dims",
                "odd_top_checks"):
        assert key in rep
    assert rep["spherical"] and rep["index"] == 2 and rep["odd_top_checks"]["ok"]
