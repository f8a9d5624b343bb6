from collections import Counter

import numpy as np
import pytest
from sympy.utilities.iterables import partitions as sym_partitions

from nilorbit import linalg
from nilorbit.chevalley import build_algebra
from nilorbit.classify import (CertificationError, PartitionError, admissible_partitions,
                               cached_orbits, classical_diagram, enumerate_orbits,
                               exact_triple, is_characteristic, partition_labels,
                               stab_conditions)
from nilorbit.grading import WeightedDiagram
from nilorbit.rootsys import SimpleType

P = linalg.DEFAULT_PRIME

# nonzero orbit counts, standard tables
COUNTS = {"A1": 1, "A3": 4, "A4": 6, "B2": 3, "B3": 6, "C2": 3, "C3": 7, "D4": 11,
          "G2": 4, "F4": 15, "E6": 20}


def conjugate(part):
    return [sum(1 for x in part if x > i) for i in range(part[0])]


def classical_dim(stype: SimpleType, part) -> int:
    """Orbit dimension from the partition (textbook formulas)."""
    s = sum(c * c for c in conjugate(list(part)))
    odd = sum(1 for x in part if x % 2)
    N = sum(part)
    if stype.family == "A":
        return N * N - s
    if stype.family == "C":
        return (N * N + N) // 2 - (s + odd) // 2
    return (N * N - N) // 2 - (s - odd) // 2


@pytest.mark.parametrize("t", sorted(COUNTS))
def test_orbit_counts(t):
    assert len(cached_orbits(t)) == COUNTS[t]


@pytest.mark.parametrize("t", ["A3", "A5", "B3", "B4", "C3", "C4", "D4", "D5"])
def test_dimension_formula(t):
    st = SimpleType.parse(t)
    for rec in cached_orbits(t):
        assert rec.dim_orbit == classical_dim(st, rec.partition), rec.partition


def jordan_ad(part):
    """ad of the Jordan matrix on gl_n, as an n^2 x n^2 integer matrix."""
    n = sum(part)
    J = np.zeros((n, n), dtype=np.int64)
    pos = 0
    for k in part:
        for i in range(k - 1):
            J[pos + i, pos + i + 1] = 1
        pos += k
    eye = np.eye(n, dtype=np.int64)
    return np.kron(J, eye) - np.kron(eye, J.T)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_type_a_against_matrices(n):
    # orbit dimension and height from explicit nilpotent matrices in gl_n
    recs = {rec.partition: rec for rec in cached_orbits(f"A{n - 1}")}
    for p in sym_partitions(n):
        part = tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True))
        if part[0] == 1:
            continue
        A = jordan_ad(part)
        rec = recs[part]
        assert rec.dim_orbit == np.linalg.matrix_rank(A)
        M, height = A.copy(), 0
        while M.any():
            height += 1
            M = M @ A
        assert rec.height == height


def test_a2_stab_without_characteristic():
    # the centraliser test alone accepts (2, 0) in A2; the sl2 completion does not
    alg = build_algebra("A2")
    d = WeightedDiagram(alg.rs, (2, 0))
    assert stab_conditions(alg, d)
    assert not is_characteristic(alg, d)
    assert [r.labels for r in cached_orbits("A2")] == [(1, 1), (2, 2)]


def test_partition_recipe():
    assert partition_labels(SimpleType.parse("A3"), (2, 2)) == (0, 2, 0)
    assert partition_labels(SimpleType.parse("D4"), (2, 2, 2, 2), 0) == (0, 0, 0, 2)
    assert partition_labels(SimpleType.parse("D4"), (2, 2, 2, 2), 1) == (0, 0, 2, 0)
    assert partition_labels(SimpleType.parse("B3"), (3, 2, 2)) == (1, 0, 1)
    a = partition_labels(SimpleType.parse("D4"), (4, 4), 0)
    b = partition_labels(SimpleType.parse("D4"), (4, 4), 1)
    assert a[:2] == b[:2] and a[2:] == b[2:][::-1] and a != b
    with pytest.raises(PartitionError):
        partition_labels(SimpleType.parse("C2"), (3, 1))
    with pytest.raises(PartitionError):
        partition_labels(SimpleType.parse("B3"), (3, 3, 1), 1)


def test_admissible_counts():
    assert len(admissible_partitions(SimpleType.parse("C3"))) == 7
    assert len(admissible_partitions(SimpleType.parse("D4"))) == 9  # two very even


def test_exact_triples_for_every_e6_orbit():
    alg = build_algebra("E6")
    for rec in cached_orbits("E6"):
        e, h, f = exact_triple(alg, rec.diagram)
        assert alg.bracket(e, f) == h
        assert alg.bracket(h, e) == e.scale(2)


def test_classical_diagram_certifies():
    d = classical_diagram("B4", (3, 2, 2, 1, 1))
    assert d.certified and d.labels == (1, 0, 1, 0)


def test_enumeration_sorted_and_seed_stable():
    alg = build_algebra("C3")
    a = enumerate_orbits(alg, P, seed=1)
    b = enumerate_orbits(alg, 1_000_003, seed=2)
    assert [r.labels for r in a] == [r.labels for r in b]
    assert [(r.dim_orbit, r.labels) for r in a] == sorted((r.dim_orbit, r.labels) for r in a)


def test_rank_limit():
    with pytest.raises(ValueError):
        enumerate_orbits(build_algebra("A9"))
