import numpy as np
import pytest

from nilorbit import linalg
from nilorbit.chevalley import build_algebra
from nilorbit.classify import cached_orbits, minimal_diagram
from nilorbit.grading import grade
from nilorbit.special import (SpecialError, bigrading, dF, directional_derivative,
                              find_O_element, find_O_element_structural, g2_closure_check,
                              heisenberg_check, power_ranks, quartic_F, special_orbit_diagram,
                              special_suite, theta_grading, theta_sample, tilde_diagram)

P = linalg.DEFAULT_PRIME


def test_g2_theta_grading():
    alg = build_algebra("G2")
    tg = theta_grading(alg)
    assert tg.dims() == [1, 4, 4, 4, 1]
    assert heisenberg_check(alg, tg)


@pytest.mark.parametrize("t,dim1", [("B4", 10), ("D5", 12), ("F4", 14), ("E6", 20),
                                    ("E7", 32), ("E8", 56)])
def test_theta_one_dimension(t, dim1):
    # g<1>_theta has dimension 2 h^vee - 4
    assert theta_grading(build_algebra(t)).dim(1) == dim1


@pytest.mark.parametrize("t,part", [("B3", (3, 2, 2)), ("B4", (3, 2, 2, 1, 1)),
                                    ("B5", (3, 2, 2, 1, 1, 1, 1)), ("D4", (3, 2, 2, 1)),
                                    ("D5", (3, 2, 2, 1, 1, 1))])
def test_special_diagram_partition(t, part):
    alg = build_algebra(t)
    labels = special_orbit_diagram(alg.rs).labels
    rec = next(r for r in cached_orbits(t) if r.labels == labels)
    assert rec.partition == part and rec.height == 3


def test_special_requires_theta_fundamental():
    with pytest.raises(SpecialError):
        special_orbit_diagram(build_algebra("A3").rs)
    with pytest.raises(SpecialError):
        special_orbit_diagram(build_algebra("B2").rs)


def test_tilde_is_doubled_minimal():
    rs = build_algebra("E6").rs
    assert tilde_diagram(rs).labels == tuple(2 * x for x in minimal_diagram(rs).labels)


def test_quartic_outside_theta_one():
    alg = build_algebra("G2")
    with pytest.raises(SpecialError):
        quartic_F(alg, alg.e(alg.rs.theta, P))


def test_dF_matches_interpolation():
    alg = build_algebra("D4")
    tg = theta_grading(alg)
    rng = np.random.default_rng(2)
    for _ in range(5):
        x = theta_sample(alg, tg, P, rng, "generic")
        y = theta_sample(alg, tg, P, rng, "generic")
        assert dF(alg, x, y) == directional_derivative(alg, x, y, tg)


def test_two_routes_agree_f4():
    alg = build_algebra("F4")
    a = find_O_element(alg, P, 1)
    b = find_O_element_structural(alg, P, 1)
    assert a.power_ranks == b.power_ranks
    assert a.height == 3 and a.power_ranks[2] == 2


@pytest.mark.parametrize("t,a,d", [("G2", 1, 2), ("B3", 2, 3), ("D4", 3, 4), ("F4", 6, 10),
                                   ("E6", 9, 18)])
def test_bigrading(t, a, d):
    alg = build_algebra(t)
    bg = bigrading(alg)
    assert (bg.a, bg.b, bg.c, bg.d) == (a, a, 0, d)
    assert bg.total == alg.dim
    gd = grade(alg, special_orbit_diagram(alg.rs))
    # the column sums reproduce the grading by the special diagram
    for i in range(-3, 4):
        assert sum(bg.dims.get((i, j), 0) for j in range(-2, 3)) == gd.dim(i)


def test_g2_closure():
    rep = g2_closure_check(build_algebra("D4"), P, 0)
    assert rep["ok"] and rep["generic"] == [14, 14, 14]


@pytest.mark.parametrize("t", ["G2", "B3", "D4"])
def test_suite_small(t):
    rep = special_suite(build_algebra(t), P, 0, samples=80, orbit_samples=10)
    assert rep["ok"], rep["failures"]


def test_generic_theta_point_is_in_the_doubled_minimal_orbit():
    alg = build_algebra("B4")
    tg = theta_grading(alg)
    x = theta_sample(alg, tg, P, np.random.default_rng(0), "generic")
    pr = power_ranks(alg, x)
    assert pr[3] == 1 and pr[4] == 0
