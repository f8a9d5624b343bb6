import copy
import json
from fractions import Fraction

import numpy as np
import pytest

from nilorbit import linalg
from nilorbit.chevalley import (FieldMismatchError, NotCharacteristicError, build_algebra,
                                complete_sl2_triple, jacobi_pair_defects,
                                jacobi_triple_defects, killing_form, root_group_element,
                                structure_constants_json)

P = linalg.DEFAULT_PRIME

# dual Coxeter numbers, standard table
DUAL_COXETER = {"A1": 2, "A3": 4, "B3": 5, "C3": 4, "D4": 6, "G2": 4, "F4": 9, "E6": 12,
                "E7": 18, "E8": 30}


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4",
                               "G2", "F4"])
def test_jacobi_exhaustive(t):
    assert jacobi_pair_defects(build_algebra(t)) == 0


def test_jacobi_detects_a_flipped_sign():
    alg = copy.copy(build_algebra("A2"))
    alg.tC = alg.tC.copy()
    n = next(n for n in range(len(alg.tC)) if alg.labels[alg.tK[n]][0] == "e")
    alg.tC[n] *= -1
    every = [(i, j, k) for i in range(8) for j in range(8) for k in range(8)]
    assert jacobi_triple_defects(alg, every) > 0


def test_sl2_relations():
    alg = build_algebra("A1")
    e, h, f = alg.e((1,)), alg.h(0), alg.e((-1,))
    assert alg.bracket(h, e) == e.scale(2)
    assert alg.bracket(h, f) == f.scale(-2)
    assert alg.bracket(e, f) == h


@pytest.mark.parametrize("t", ["A3", "G2", "F4"])
def test_dimension(t):
    alg = build_algebra(t)
    assert alg.dim == len(alg.rs.all_roots) + alg.rank
    assert alg.borel_indices == list(range(alg.n_pos, alg.dim))


@pytest.mark.parametrize("t", sorted(DUAL_COXETER))
def test_killing_normalisation(t):
    # K(h_theta, h_theta) = 4 h^vee for the coroot of the (long) highest root
    alg = build_algebra(t)
    G = alg.killing_gram
    assert linalg.rank_mod(np.mod(G, P), P) == alg.dim
    h = alg.h_root(alg.rs.theta)
    assert killing_form(alg, h, h) == 4 * DUAL_COXETER[t]


def test_killing_invariance():
    alg = build_algebra("B3")
    rng = np.random.default_rng(3)
    for _ in range(20):
        x, y, z = (alg.element({int(k): int(rng.integers(1, 50))
                                for k in rng.integers(0, alg.dim, 4)}, P) for _ in range(3))
        assert alg.killing(alg.bracket(x, y), z) == alg.killing(x, alg.bracket(y, z))


def test_root_group_is_automorphism():
    alg = build_algebra("G2")
    rng = np.random.default_rng(5)
    for _ in range(30):
        g = alg.rs.all_roots[int(rng.integers(len(alg.rs.all_roots)))]
        t = int(rng.integers(1, P))
        A = root_group_element(alg, g, t, P)
        x = alg.element({k: int(v) for k, v in enumerate(rng.integers(0, P, alg.dim))}, P)
        y = alg.element({k: int(v) for k, v in enumerate(rng.integers(0, P, alg.dim))}, P)
        ax = alg.zero(P); ax.coeffs = linalg.matmul_mod(A, x.coeffs.reshape(-1, 1), P).ravel()
        ay = alg.zero(P); ay.coeffs = linalg.matmul_mod(A, y.coeffs.reshape(-1, 1), P).ravel()
        lhs = linalg.matmul_mod(A, alg.bracket(x, y).coeffs.reshape(-1, 1), P).ravel()
        assert (lhs == alg.bracket(ax, ay).coeffs).all()
        assert alg.root_group_apply(g, t, x) == ax


def test_root_group_exact_matches_mod_p():
    alg = build_algebra("B2")
    g = alg.rs.positive_roots[-1]
    A = root_group_element(alg, g, Fraction(3, 2))
    Ap = root_group_element(alg, g, 3 * pow(2, P - 2, P) % P, P)
    assert (linalg.as_mod(A, P) == Ap).all()


def test_complete_sl2_triple_principal():
    alg = build_algebra("B3")
    e = alg.zero()
    for s in alg.rs.simples:
        e = e + alg.e(s)
    # 2 rho^vee in simple coroots gives the principal characteristic
    from nilorbit.grading import WeightedDiagram, characteristic_element
    h = characteristic_element(alg, WeightedDiagram(alg.rs, (2, 2, 2)))
    f = complete_sl2_triple(alg, e, h)
    assert alg.bracket(e, f) == h
    assert all(Fraction(c).denominator == 1 for c in f.coeffs)


def test_complete_sl2_triple_rejects():
    alg = build_algebra("A2")
    from nilorbit.grading import WeightedDiagram, characteristic_element
    h = characteristic_element(alg, WeightedDiagram(alg.rs, (2, 0)))
    e = alg.e((1, 0)) + alg.e((1, 1))
    with pytest.raises(NotCharacteristicError):
        complete_sl2_triple(alg, e, h)


def test_field_mismatch():
    alg = build_algebra("A1")
    with pytest.raises(FieldMismatchError):
        alg.bracket(alg.e((1,)), alg.e((-1,), P))


def test_structure_constants_json_roundtrip():
    alg = build_algebra("A2")
    data = json.loads(json.dumps(structure_constants_json(alg)))
    assert data["dim"] == 8 and len(data["basis"]) == 8
    # rebuild brackets from the dump and compare
    for i, j, k, c in data["triples"]:
        assert alg.bracket(alg.basis_element(i), alg.basis_element(j)).coeffs[k] == c
