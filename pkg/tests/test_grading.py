import itertools

import numpy as np
import pytest

from nilorbit import linalg
from nilorbit.chevalley import build_algebra
from nilorbit.classify import certify
from nilorbit.grading import (GradingError, WeightedDiagram, characteristic_element,
                              dims_prefilter, generic_element, grade, height_of)

P = linalg.DEFAULT_PRIME


def test_render_and_symmetry():
    alg = build_algebra("G2")
    gd = grade(alg, WeightedDiagram(alg.rs, (1, 0)))
    gd.check_symmetry()
    assert gd.render() == "dims[-3..3] = 2, 1, 2, 4, 2, 1, 2"
    assert height_of(gd) == 3
    assert sum(gd.dims().values()) == alg.dim


def test_characteristic_element_degrees():
    alg = build_algebra("F4")
    d = WeightedDiagram(alg.rs, (0, 1, 0, 1))
    h = characteristic_element(alg, d)
    gd = grade(alg, d)
    assert [int(v) for v in alg.cartan_degrees(h)] == gd.degrees.tolist()


def test_labels_validated():
    alg = build_algebra("A2")
    with pytest.raises(GradingError):
        WeightedDiagram(alg.rs, (3, 0))
    with pytest.raises(GradingError):
        WeightedDiagram(alg.rs, (1, 0, 0))


def test_reference_numbering_roundtrip():
    alg = build_algebra("E7")
    d = WeightedDiagram.from_paper(alg.rs, (1, 0, 0, 0, 0, 0, 1))
    assert d.paper_labels() == (1, 0, 0, 0, 0, 0, 1)
    assert d.labels != d.paper_labels()


def test_generic_element_deterministic():
    alg = build_algebra("B3")
    gd = grade(alg, WeightedDiagram(alg.rs, (0, 1, 0)))
    a = generic_element(gd, 2, P, seed=4)
    b = generic_element(gd, 2, P, seed=4)
    assert a == b and set(a.support) == set(gd.indices(2))


@pytest.mark.parametrize("t", ["B3", "C3", "G2", "A4"])
def test_prefilter_never_rejects_an_orbit(t):
    alg = build_algebra(t)
    cand = np.array(list(itertools.product((0, 1, 2), repeat=alg.rank))[1:], dtype=np.int64)
    mask = dims_prefilter(alg, cand)
    for labels, keep in zip(cand.tolist(), mask):
        if not keep:
            assert certify(alg, WeightedDiagram(alg.rs, tuple(labels))) is None
