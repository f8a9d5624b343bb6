import pytest

from nilorbit.chevalley import build_algebra
from nilorbit.classify import cached_orbits
from nilorbit.covariants import (CovariantError, GammaMonoid, check_disjoint_support,
                                 gamma_monoid, lower_canonical_string, orbit_delta2,
                                 saturation_window, table1_report, upper_canonical_string)


def test_ucs_sl4_rank_two():
    alg = build_algebra("A3")
    rec = next(r for r in cached_orbits("A3") if r.partition == (2, 2))
    rep = table1_report(alg, rec)
    assert rep["ucs"] == [[1, 0, 0, -1], [0, 1, -1, 0]]
    assert rep["generators_text"] == ["w1+w3", "2w2"]


@pytest.mark.parametrize("t", ["A5", "B4", "C4", "D5", "G2", "F4", "E6"])
def test_every_height_two_orbit(t):
    alg = build_algebra(t)
    for rec in cached_orbits(t):
        if rec.height != 2:
            continue
        rs = alg.rs
        d2 = orbit_delta2(alg, rec)
        ucs = upper_canonical_string(rs, d2)
        assert ucs.gammas[0] == rs.theta
        for i, a in enumerate(ucs.gammas):
            for b in ucs.gammas[i + 1:]:
                assert rs.inner(a, b) == 0
        gm = gamma_monoid(rs, ucs)
        assert check_disjoint_support(gm)
        assert saturation_window(gm)
        if rec.diagram.is_even:
            assert set(lower_canonical_string(rs, d2).gammas) == set(ucs.gammas)


def test_disjoint_support_detects_overlap():
    assert check_disjoint_support([(1, 0, 0), (0, 1, 1)])
    assert not check_disjoint_support([(1, 1, 0), (0, 1, 0)])


def test_saturation_window_detects_gap():
    # (1,1) - (0,1) = (1,0) is dominant but needs a negative coefficient
    assert saturation_window(GammaMonoid((((2, 0), 1), ((0, 1), 2))))
    assert not saturation_window(GammaMonoid((((1, 1), 1), ((0, 1), 2))))


def test_non_height_two_rejected():
    alg = build_algebra("G2")
    with pytest.raises(CovariantError):
        table1_report(alg, cached_orbits("G2")[1])
