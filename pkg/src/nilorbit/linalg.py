"""Exact linear algebra kernels over F_p (numpy int64) and Q (Fractions).

Everything generic in the package runs through the mod-p routines; the
rational ones are reserved for certificates (sl2 completion, Gram ranks).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

DEFAULT_PRIME = 2**31 - 19

# p < 2**31 keeps every single product of reduced entries below 2**62.
_MAX_PRIME = 2**31


def check_prime(p: int) -> int:
    if not (2 < p < _MAX_PRIME):
        raise ValueError(f"prime must lie in (2, 2**31), got {p}")
    return int(p)


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(a, p - 2, p)


def as_mod(a, p: int) -> np.ndarray:
    """Reduce an integer array (or nested list) into [0, p)."""
    arr = np.asarray(a)
    if arr.dtype == object:
        if arr.size == 0:
            return arr.astype(np.int64)
        return np.vectorize(lambda v: _frac_mod(v, p), otypes=[np.int64])(arr)
    return np.mod(arr.astype(np.int64, copy=False), p)


def _frac_mod(v, p: int) -> int:
    v = Fraction(v)
    return (v.numerator % p) * inv_mod(v.denominator, p) % p


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """(a @ b) mod p for reduced int64 inputs, without int64 overflow.

    The left factor is split into 16-bit halves so each partial dot product
    stays below 2**63 for inner dimensions up to ~2**16.
    """
    lo = a & 0xFFFF
    hi = a >> 16
    out = np.mod(hi @ b, p)
    out *= 65536
    out += lo @ b
    return np.mod(out, p, out=out)


def _eliminate(a: np.ndarray, p: int, full: bool) -> tuple[np.ndarray, list[int]]:
    """Row reduce a copy of ``a`` mod p. ``full`` clears above pivots too."""
    a = np.array(a, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i], c:] = a[[i, r], c:]
        inv = inv_mod(int(a[r, c]), p)
        a[r, c:] = np.mod(a[r, c:] * inv, p)
        lo = 0 if full else r + 1
        col = a[lo:, c].copy()
        if full:
            col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            tgt = hit + lo
            upd = np.mod(np.outer(col[hit], a[r, c:]), p)
            a[tgt, c:] = np.mod(a[tgt, c:] - upd, p)
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod(a, p: int) -> int:
    a = as_mod(a, p)
    if a.size == 0:
        return 0
    # Eliminate along the shorter side.
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(_eliminate(a, p, full=False)[1])


def rref_mod(a, p: int) -> tuple[np.ndarray, list[int]]:
    return _eliminate(as_mod(a, p), p, full=True)


def nullspace_mod(a, p: int) -> np.ndarray:
    """Basis of {v : a v = 0} mod p, returned as the columns of a matrix."""
    a = as_mod(a, p)
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    r, piv = rref_mod(a, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for row, pc in enumerate(piv):
            basis[pc, k] = (-r[row, fc]) % p
    return basis


def solve_mod(a, b, p: int) -> Optional[np.ndarray]:
    """One solution x of a x = b mod p, or None when inconsistent."""
    a = as_mod(a, p)
    b = as_mod(b, p).reshape(-1, 1)
    aug = np.hstack([a, b])
    r, piv = rref_mod(aug, p)
    n = a.shape[1]
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for row, pc in enumerate(piv):
        x[pc] = r[row, n]
    return x


def in_column_span_mod(a, b, p: int) -> bool:
    a = as_mod(a, p)
    b = as_mod(b, p).reshape(-1, 1)
    if a.shape[1] == 0:
        return not np.any(b)
    return rank_mod(np.hstack([a, b]), p) == rank_mod(a, p)


# ---------------------------------------------------------------- rationals

def _frac_matrix(a) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in a]


def rref_q(a) -> tuple[list[list[Fraction]], list[int]]:
    m = _frac_matrix(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        i = next((k for k in range(r, rows) if m[k][c] != 0), None)
        if i is None:
            continue
        m[r], m[i] = m[i], m[r]
        piv = m[r][c]
        pr = [v / piv for v in m[r]]
        m[r] = pr
        nzc = [j for j in range(c, cols) if pr[j] != 0]
        for k in range(rows):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                row = m[k]
                for j in nzc:
                    row[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return m, pivots


def rank_q(a) -> int:
    if len(a) == 0:
        return 0
    return len(rref_q(a)[1])


def nullspace_q(a) -> list[list[Fraction]]:
    """Kernel basis over Q, as a list of vectors."""
    m, piv = rref_q(a)
    n = len(m[0]) if m else 0
    pset = set(piv)
    out = []
    for fc in (c for c in range(n) if c not in pset):
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for row, pc in enumerate(piv):
            v[pc] = -m[row][fc]
        out.append(v)
    return out


def solve_q(a, b: Sequence) -> Optional[list[Fraction]]:
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    if not aug:
        return []
    m, piv = rref_q(aug)
    n = len(aug[0]) - 1
    if piv and piv[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, pc in enumerate(piv):
        x[pc] = m[row][n]
    return x


def rational_reconstruct(a: int, p: int) -> Optional[Fraction]:
    """Smallest-height fraction congruent to a mod p (Wang's algorithm)."""
    a %= p
    bound = int((p // 2) ** 0.5)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)
