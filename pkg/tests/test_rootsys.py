import itertools

import pytest
import sympy
from sympy.liealgebras.cartan_matrix import CartanMatrix

from nilorbit.rootsys import (RootSystemError, SimpleType, beta_root, build_root_system,
                              format_weight, internal_to_paper, is_theta_fundamental,
                              paper_to_internal, to_fundamental_coords)

# number of positive roots: standard table
N_POS = {"A1": 1, "A2": 3, "A3": 6, "A7": 28, "B2": 4, "B3": 9, "B5": 25, "C3": 9, "C5": 25,
         "D4": 12, "D5": 20, "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}

# highest roots on the simple roots, Bourbaki numbering
THETA = {"G2": (3, 2), "F4": (2, 3, 4, 2), "E6": (1, 2, 2, 3, 2, 1),
         "E7": (2, 2, 3, 4, 3, 2, 1), "E8": (2, 3, 4, 6, 5, 4, 3, 2),
         "B4": (1, 2, 2, 2), "C4": (2, 2, 2, 1), "D5": (1, 2, 2, 1, 1), "A4": (1, 1, 1, 1)}


@pytest.mark.parametrize("t", sorted(N_POS))
def test_root_counts(t):
    rs = build_root_system(t)
    assert len(rs.positive_roots) == N_POS[t]
    assert len(rs.all_roots) == 2 * N_POS[t]


@pytest.mark.parametrize("t", ["A4", "B3", "C4", "D5", "G2", "F4", "E6", "E7", "E8"])
def test_cartan_matches_sympy(t):
    assert sympy.Matrix(build_root_system(t).cartan) == CartanMatrix(t)


@pytest.mark.parametrize("t", sorted(THETA))
def test_highest_root(t):
    rs = build_root_system(t)
    assert rs.theta.coeffs == THETA[t]
    for r in rs.positive_roots:
        assert rs.dominates(rs.theta, r)


@pytest.mark.parametrize("t", ["B3", "G2", "F4", "D4"])
def test_reflection_closure(t):
    rs = build_root_system(t)
    roots = set(r.coeffs for r in rs.all_roots)
    for a in rs.all_roots:
        for s in rs.simples:
            refl = tuple(x - int(rs.coroot_pairing(a, s)) * y for x, y in zip(a.coeffs, s.coeffs))
            assert refl in roots


@pytest.mark.parametrize("t", ["B3", "G2", "F4", "D4"])
def test_root_strings(t):
    # the a-string through b runs from b - p a to b + q a with p - q = <b, a^vee>
    rs = build_root_system(t)
    roots = set(r.coeffs for r in rs.all_roots)
    for a, b in itertools.product(rs.all_roots, repeat=2):
        if a == b or a.coeffs == (-b).coeffs:
            continue
        step = lambda k: tuple(y + k * x for x, y in zip(a.coeffs, b.coeffs))
        p = 0
        while step(-(p + 1)) in roots:
            p += 1
        q = 0
        while step(q + 1) in roots:
            q += 1
        assert p - q == int(rs.coroot_pairing(b, a))


def test_parse_and_errors():
    assert str(SimpleType.parse("e_8")) == "E8"
    for bad in ["Z9", "B1", "E9", "F5", "A0", ""]:
        with pytest.raises(RootSystemError):
            SimpleType.parse(bad)


def test_theta_fundamental_types():
    yes = ["B3", "B4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]
    no = ["A1", "A3", "C3", "B2", "D3"]
    assert all(is_theta_fundamental(build_root_system(t)) for t in yes)
    assert not any(is_theta_fundamental(build_root_system(t)) for t in no)


def test_beta_root():
    # internal Bourbaki indices (0-based) of the node with theta = fundamental weight
    expect = {"B4": 1, "D5": 1, "G2": 1, "F4": 0, "E6": 1, "E7": 0, "E8": 7}
    for t, b in expect.items():
        rs = build_root_system(t)
        assert beta_root(rs) == b
        fc = to_fundamental_coords(rs, rs.theta.coords)
        assert [int(c) for c in fc] == [int(i == b) for i in range(rs.rank)]


@pytest.mark.parametrize("t", ["E6", "E7", "E8", "F4", "G2", "D4"])
def test_numbering_roundtrip(t):
    st = SimpleType.parse(t)
    v = tuple(range(10, 10 + st.rank))
    assert internal_to_paper(st, paper_to_internal(st, v)) == v


def test_reference_numbering_of_theta_node():
    # in the reference numbering theta is the fundamental weight of node 1 in E8,
    # node 1 in E7, node 6 in E6 and node 4 in F4
    for t, node in [("E8", 1), ("E7", 6), ("E6", 6), ("F4", 4)]:
        rs = build_root_system(t)
        fc = internal_to_paper(rs.stype, to_fundamental_coords(rs, rs.theta.coords))
        assert fc[node - 1] == 1 and sum(fc) == 1, t


def test_format_weight():
    assert format_weight((2, 0, 1)) == "2w1+w3"
    assert format_weight((0, 0)) == "0"
