from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from nilorbit import linalg

P = linalg.DEFAULT_PRIME

small_int_matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(small_int_matrices)
def test_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank()
    assert linalg.rank_mod(linalg.as_mod(np.array(rows), P), P) == expected
    assert linalg.rank_q(rows) == expected


@settings(max_examples=60, deadline=None)
@given(small_int_matrices)
def test_nullspace_mod_is_kernel(rows):
    A = linalg.as_mod(np.array(rows), P)
    N = linalg.nullspace_mod(A, P)
    assert N.shape[1] == A.shape[1] - linalg.rank_mod(A, P)
    assert not linalg.matmul_mod(A, N, P).any()


@settings(max_examples=60, deadline=None)
@given(small_int_matrices)
def test_nullspace_q_is_kernel(rows):
    ns = linalg.nullspace_q(rows)
    assert len(ns) == len(rows[0]) - sympy.Matrix(rows).rank()
    for v in ns:
        for r in rows:
            assert sum(Fraction(a) * b for a, b in zip(r, v)) == 0


def test_matmul_mod_no_overflow():
    rng = np.random.default_rng(1)
    a = rng.integers(0, P, size=(30, 40), dtype=np.int64)
    b = rng.integers(0, P, size=(40, 20), dtype=np.int64)
    got = linalg.matmul_mod(a, b, P)
    exact = (np.array(a, dtype=object) @ np.array(b, dtype=object)) % P
    assert (got == exact.astype(np.int64)).all()


def test_solve_mod_inconsistent():
    A = np.array([[1, 1], [2, 2]], dtype=np.int64)
    assert linalg.solve_mod(A, np.array([1, 3]), P) is None
    x = linalg.solve_mod(A, np.array([1, 2]), P)
    assert (linalg.matmul_mod(A, x.reshape(-1, 1), P).ravel() == [1, 2]).all()


def test_rational_reconstruct():
    for q in [Fraction(3, 7), Fraction(-22, 5), Fraction(1, 1), Fraction(0)]:
        v = (q.numerator % P) * pow(q.denominator, P - 2, P) % P
        assert linalg.rational_reconstruct(v, P) == q


def test_check_prime_bounds():
    with pytest.raises(ValueError):
        linalg.check_prime(2**31 + 11)
    with pytest.raises(ValueError):
        linalg.check_prime(2)
