"""Simple Lie algebras as integer structure constants in a Chevalley basis.

Basis order: root vectors of negative roots (by decreasing depth), then the
Cartan generators h_1..h_r, then root vectors of positive roots (by height).
The Borel subalgebra t + u_+ is therefore the tail of the basis.

Signs follow the extraspecial-pair recipe: N_{a,b} = +(p+1) on every
extraspecial pair, all other constants forced by the standard identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional

import numpy as np
import scipy.sparse as sp

from . import linalg
from .rootsys import Root, RootSystem, SimpleType, build_root_system


class FieldMismatchError(TypeError):
    pass


class NotCharacteristicError(ValueError):
    """Raised when [e, f] = h has no solution f of h-degree -2."""


@dataclass
class AlgebraElement:
    """Coordinates in the Chevalley basis over Q (prime=None) or F_p."""

    coeffs: np.ndarray
    prime: Optional[int] = None

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.prime != self.prime:
            raise FieldMismatchError(f"cannot mix F_{self.prime} and F_{other.prime}")

    def _wrap(self, c):
        if self.prime is not None:
            c = np.mod(c, self.prime)
        return AlgebraElement(c, self.prime)

    def __add__(self, other):
        self._check(other)
        return self._wrap(self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return self._wrap(self.coeffs - other.coeffs)

    def __neg__(self):
        return self._wrap(-self.coeffs)

    def scale(self, t):
        if self.prime is None:
            return AlgebraElement(self.coeffs * Fraction(t), None)
        return self._wrap(self.coeffs * (int(t) % self.prime))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.prime == other.prime and bool(np.all(self.coeffs == other.coeffs))

    def to_mod(self, p: int) -> "AlgebraElement":
        if self.prime == p:
            return self
        if self.prime is not None:
            raise FieldMismatchError("can only reduce rational elements")
        return AlgebraElement(linalg.as_mod(self.coeffs, p), p)


def _zeros(n: int, prime: Optional[int]) -> np.ndarray:
    if prime is None:
        return np.array([Fraction(0)] * n, dtype=object)
    return np.zeros(n, dtype=np.int64)


class ChevalleyAlgebra:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        neg = [r for r in rs.all_roots if not r.is_positive]
        pos = rs.positive_roots
        self.labels: list[tuple] = ([("e", r.coeffs) for r in neg]
                                    + [("h", i) for i in range(rs.rank)]
                                    + [("e", r.coeffs) for r in pos])
        self.dim = len(self.labels)
        self.n_pos = len(pos)
        self.root_index: dict[tuple[int, ...], int] = {
            lab[1]: k for k, lab in enumerate(self.labels) if lab[0] == "e"}
        self.cartan_indices = list(range(len(neg), len(neg) + rs.rank))
        self.borel_indices = list(range(len(neg), self.dim))
        self.roots_by_index: dict[int, Root] = {self.root_index[r.coeffs]: r for r in rs.all_roots}
        self.N = _structure_constants(rs)
        I, J, K, C = self._triples()
        self.tI, self.tJ, self.tK, self.tC = I, J, K, C
        d = self.dim
        # vec(ad x)[k*d + j] = sum_i c_ijk x_i
        self._S = sp.csr_matrix((C, (K * d + J, I)), shape=(d * d, d), dtype=np.int64)
        # basis_degree_vectors[k] = coefficient vector of basis element (zeros for Cartan)
        self.root_coeffs = np.zeros((d, rs.rank), dtype=np.int64)
        for k, lab in enumerate(self.labels):
            if lab[0] == "e":
                self.root_coeffs[k] = lab[1]

    # ------------------------------------------------------------ structure

    def coroot_expansion(self, g: Root) -> list[int]:
        """Coefficients of h_g = g^vee on the simple coroots."""
        rs = self.rs
        n2 = rs.norm2(g)
        out = []
        for i, a in enumerate(rs.simples):
            c = Fraction(g.coeffs[i]) * rs.norm2(a) / n2
            assert c.denominator == 1
            out.append(int(c))
        return out

    def _triples(self):
        rs = self.rs
        I, J, K, C = [], [], [], []

        def add(i, j, k, c):
            if c:
                I.append(i); J.append(j); K.append(k); C.append(c)

        for x in rs.all_roots:
            ix = self.root_index[x.coeffs]
            for i in range(self.rank):
                hi = self.cartan_indices[i]
                c = int(rs.coroot_pairing(x, rs.simples[i]))
                add(hi, ix, ix, c)
                add(ix, hi, ix, -c)
            for y in rs.all_roots:
                s = tuple(a + b for a, b in zip(x.coeffs, y.coeffs))
                iy = self.root_index[y.coeffs]
                if not any(s):
                    for i, c in enumerate(self.coroot_expansion(x)):
                        add(ix, iy, self.cartan_indices[i], c)
                elif s in self.root_index:
                    add(ix, iy, self.root_index[s], self.N[(x.coeffs, y.coeffs)])
        return (np.array(I, dtype=np.int64), np.array(J, dtype=np.int64),
                np.array(K, dtype=np.int64), np.array(C, dtype=np.int64))

    # ------------------------------------------------------------ elements

    def zero(self, prime: Optional[int] = None) -> AlgebraElement:
        return AlgebraElement(_zeros(self.dim, prime), prime)

    def basis_element(self, k: int, prime: Optional[int] = None) -> AlgebraElement:
        x = self.zero(prime)
        x.coeffs[k] = 1 if prime is not None else Fraction(1)
        return x

    def e(self, root, prime: Optional[int] = None) -> AlgebraElement:
        coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
        return self.basis_element(self.root_index[coeffs], prime)

    def h(self, i: int, prime: Optional[int] = None) -> AlgebraElement:
        return self.basis_element(self.cartan_indices[i], prime)

    def h_root(self, g: Root, prime: Optional[int] = None) -> AlgebraElement:
        x = self.zero(prime)
        for i, c in enumerate(self.coroot_expansion(g)):
            x.coeffs[self.cartan_indices[i]] = c if prime is not None else Fraction(c)
        if prime is not None:
            x.coeffs %= prime
        return x

    def element(self, values: dict[int, object], prime: Optional[int] = None) -> AlgebraElement:
        x = self.zero(prime)
        for k, v in values.items():
            x.coeffs[k] = Fraction(v) if prime is None else int(v) % prime
        return x

    # ------------------------------------------------------------ products

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        x._check(y)
        p = x.prime
        if p is None:
            out = _zeros(self.dim, None)
            xc, yc = x.coeffs, y.coeffs
            for i, j, k, c in zip(self.tI, self.tJ, self.tK, self.tC):
                a = xc[i]
                if a:
                    b = yc[j]
                    if b:
                        out[k] += int(c) * a * b
            return AlgebraElement(out, None)
        prod = np.mod(self.tC * x.coeffs[self.tI], p)
        prod = np.mod(prod * y.coeffs[self.tJ], p)
        out = np.zeros(self.dim, dtype=np.int64)
        np.add.at(out, self.tK, prod)
        return AlgebraElement(np.mod(out, p), p)

    def ad(self, x: AlgebraElement) -> np.ndarray:
        """Matrix of ad x; column j holds [x, b_j]."""
        d = self.dim
        if x.prime is None:
            m = np.empty((d, d), dtype=object)
            m.fill(Fraction(0))
            xc = x.coeffs
            for i, j, k, c in zip(self.tI, self.tJ, self.tK, self.tC):
                a = xc[i]
                if a:
                    m[k, j] += int(c) * a
            return m
        v = self._S @ x.coeffs
        return np.mod(v, x.prime).reshape(d, d)

    def ad_int(self, x: np.ndarray) -> np.ndarray:
        """ad of an integer coefficient vector, in exact int64 arithmetic."""
        return (self._S @ np.asarray(x, dtype=np.int64)).reshape(self.dim, self.dim)

    @cached_property
    def ad_basis(self) -> list[sp.csr_matrix]:
        """Sparse ad(b_i) for each basis element, integer entries."""
        d = self.dim
        mats = []
        for i in range(d):
            sel = self.tI == i
            mats.append(sp.csr_matrix((self.tC[sel], (self.tK[sel], self.tJ[sel])),
                                      shape=(d, d), dtype=np.int64))
        return mats

    @cached_property
    def killing_gram(self) -> np.ndarray:
        """Integer Gram matrix tr(ad b_i ad b_j)."""
        d = self.dim
        S = self._S.tocsr()
        perm = (np.arange(d * d) % d) * d + np.arange(d * d) // d
        T = S[perm]
        return np.asarray((S.T @ T).todense(), dtype=np.int64)

    def killing(self, x: AlgebraElement, y: AlgebraElement):
        x._check(y)
        G = self.killing_gram
        if x.prime is None:
            return sum((Fraction(int(G[i, j])) * x.coeffs[i] * y.coeffs[j]
                        for i in x.support for j in y.support if G[i, j]), Fraction(0))
        p = x.prime
        gy = linalg.matmul_mod(np.mod(G, p), y.coeffs.reshape(-1, 1), p).ravel()
        return int(np.mod(np.mod(x.coeffs * gy, p).sum(), p))

    # ------------------------------------------------------------ groups

    def root_group_apply(self, g: Root, t, x: AlgebraElement) -> AlgebraElement:
        """exp(t ad e_g) applied to x."""
        p = x.prime
        A = self.ad_basis[self.root_index[g.coeffs]]
        out = x.coeffs.copy()
        term = x.coeffs
        k = 0
        while True:
            k += 1
            if p is None:
                term = np.array([Fraction(0)] * self.dim, dtype=object) if not any(term) else \
                    _sparse_obj_matvec(A, term) * (Fraction(t) / k)
            else:
                term = np.mod(A @ term, p)
                term = np.mod(term * (int(t) % p), p)
                term = np.mod(term * linalg.inv_mod(k, p), p)
            if not any(term):
                break
            out = out + term
            if p is not None:
                out = np.mod(out, p)
        return AlgebraElement(out, p)

    def root_group_element(self, g: Root, t, prime: Optional[int] = None) -> np.ndarray:
        """exp(t ad e_g) as an exact matrix (object Fractions or int64 mod p)."""
        A = self.ad(self.e(g, prime))
        d = self.dim
        if prime is None:
            out = np.empty((d, d), dtype=object)
            out.fill(Fraction(0))
            for i in range(d):
                out[i, i] = Fraction(1)
            term = out.copy()
            k = 0
            while True:
                k += 1
                term = (A.dot(term)) * (Fraction(t) / k)
                if not any(v != 0 for v in term.ravel()):
                    return out
                out = out + term
        p = prime
        out = np.eye(d, dtype=np.int64)
        term = out.copy()
        k = 0
        scale = int(t) % p
        while True:
            k += 1
            term = linalg.matmul_mod(A, term, p)
            term = np.mod(term * (scale * linalg.inv_mod(k, p) % p), p)
            if not term.any():
                return out
            out = np.mod(out + term, p)

    def cartan_degrees(self, h: AlgebraElement) -> list:
        """Eigenvalue of ad h on each basis vector, for h in the Cartan."""
        if any(h.coeffs[k] for k in range(self.dim) if k not in set(self.cartan_indices)):
            raise ValueError("h is not in the Cartan subalgebra")
        c = [h.coeffs[k] for k in self.cartan_indices]
        out = []
        for lab in self.labels:
            if lab[0] == "h":
                out.append(0)
                continue
            r = self.rs.root(lab[1])
            v = 0
            for i in range(self.rank):
                if c[i]:
                    v = v + c[i] * int(self.rs.coroot_pairing(r, self.rs.simples[i]))
            if h.prime is not None:
                v %= h.prime
            out.append(v)
        return out


def _sparse_obj_matvec(A: sp.csr_matrix, v: np.ndarray) -> np.ndarray:
    out = np.array([Fraction(0)] * A.shape[0], dtype=object)
    coo = A.tocoo()
    for r, c, a in zip(coo.row, coo.col, coo.data):
        if v[c]:
            out[r] += int(a) * v[c]
    return out


def _structure_constants(rs: RootSystem) -> dict:
    """N_{x,y} for every ordered pair of roots with x + y a root."""
    pos = rs.positive_roots
    order = {r.coeffs: k for k, r in enumerate(pos)}
    is_root = rs.is_root
    n2 = {r.coeffs: rs.norm2(r) for r in rs.all_roots}
    Npos: dict = {}

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(a):
        return tuple(-x for x in a)

    def positive(a):
        return sum(a) > 0

    def Nget(x, y):
        s = add(x, y)
        if not any(s) or not is_root(s):
            return 0
        px, py = positive(x), positive(y)
        if px and py:
            return Npos[(x, y)]
        if not px and not py:
            return -Npos[(neg(x), neg(y))]
        if not px:
            return -Nget(y, x)
        b = neg(y)
        z = s
        if positive(z):
            # x + y - z = 0:  N_{x,y}/|z|^2 = N_{y,-z}/|x|^2,  N_{-b,-z} = -N_{b,z}
            val = n2[z] / n2[x] * (-Npos[(b, z)])
        else:
            w = neg(z)
            # x + y + w = 0:  N_{x,y}/|w|^2 = N_{w,x}/|y|^2
            val = n2[w] / n2[y] * Npos[(w, x)]
        assert val.denominator == 1
        return int(val)

    by_height = sorted(pos, key=lambda r: (r.height, r.coeffs))
    for xi in by_height:
        if xi.height == 1:
            continue
        xc = xi.coeffs
        pairs = [(a.coeffs, sub(xc, a.coeffs)) for a in pos
                 if is_root(sub(xc, a.coeffs)) and positive(sub(xc, a.coeffs))]
        pairs = [(a, b) for a, b in pairs if order[a] < order[b]]
        a1, b1 = min(pairs, key=lambda ab: order[ab[0]])
        p = 0
        while is_root(sub(b1, tuple((p + 1) * v for v in a1))):
            p += 1
        Npos[(a1, b1)] = p + 1
        Npos[(b1, a1)] = -(p + 1)
        for a, b in pairs:
            if (a, b) == (a1, b1):
                continue
            t1 = Fraction(0)
            ba1 = sub(b, a1)
            if any(ba1) and is_root(ba1):
                t1 = Fraction(Nget(b, neg(a1)) * Nget(a, neg(b1))) / n2[ba1]
            t2 = Fraction(0)
            aa1 = sub(a, a1)
            if any(aa1) and is_root(aa1):
                t2 = Fraction(Nget(neg(a1), a) * Nget(b, neg(b1))) / n2[aa1]
            val = n2[xc] / Npos[(a1, b1)] * (t1 + t2)
            assert val.denominator == 1 and val != 0, (a, b, val)
            Npos[(a, b)] = int(val)
            Npos[(b, a)] = -int(val)

    table = {}
    for x in rs.all_roots:
        for y in rs.all_roots:
            s = add(x.coeffs, y.coeffs)
            if any(s) and is_root(s):
                table[(x.coeffs, y.coeffs)] = Nget(x.coeffs, y.coeffs)
    return table


def build_algebra(rs: RootSystem | SimpleType | str) -> ChevalleyAlgebra:
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    return _algebra(rs)


@lru_cache(maxsize=None)
def _algebra(rs: RootSystem) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(rs)


def jacobi_pair_defects(alg: ChevalleyAlgebra) -> int:
    """Number of basis pairs (i, j) with ad[b_i, b_j] != [ad b_i, ad b_j].

    Zero for every pair is equivalent to the Jacobi identity on all basis triples.
    """
    mats = alg.ad_basis
    by_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for i, j, k, c in zip(alg.tI.tolist(), alg.tJ.tolist(), alg.tK.tolist(), alg.tC.tolist()):
        by_pair.setdefault((i, j), []).append((k, c))
    bad = 0
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = mats[i] @ mats[j] - mats[j] @ mats[i]
            for k, c in by_pair.get((i, j), ()):
                lhs = lhs - c * mats[k]
            if lhs.count_nonzero():
                bad += 1
    return bad


def jacobi_triple_defects(alg: ChevalleyAlgebra, triples) -> int:
    """Count basis triples (i, j, k) violating the Jacobi identity."""
    table: dict[int, dict[int, list[tuple[int, int]]]] = {}
    for i, j, k, c in zip(alg.tI.tolist(), alg.tJ.tolist(), alg.tK.tolist(), alg.tC.tolist()):
        table.setdefault(i, {}).setdefault(j, []).append((k, c))

    def br(vec: dict[int, int], k: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for m, a in vec.items():
            for n, c in table.get(m, {}).get(k, ()):
                out[n] = out.get(n, 0) + a * c
        return out

    bad = 0
    for i, j, k in triples:
        total: dict[int, int] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = {n: v for n, v in table.get(a, {}).get(b, ())}
            for n, v in br(inner, c).items():
                total[n] = total.get(n, 0) + v
        if any(total.values()):
            bad += 1
    return bad


def structure_constants_json(alg: ChevalleyAlgebra) -> dict:
    """Nonzero brackets [b_i, b_j] = sum_k c b_k as (i, j, k, c) triples."""
    labels = []
    for kind, val in alg.labels:
        labels.append({"kind": kind, "index": val} if kind == "h"
                      else {"kind": kind, "root": list(val)})
    triples = sorted(zip(alg.tI.tolist(), alg.tJ.tolist(), alg.tK.tolist(), alg.tC.tolist()))
    return {"type": str(alg.rs.stype), "dim": alg.dim, "basis": labels,
            "triples": [list(t) for t in triples]}


# Module-level spellings of the algebra operations.

def ad_matrix(alg: ChevalleyAlgebra, x: AlgebraElement) -> np.ndarray:
    return alg.ad(x)


def killing_form(alg: ChevalleyAlgebra, x: AlgebraElement, y: AlgebraElement):
    return alg.killing(x, y)


def root_group_element(alg: ChevalleyAlgebra, g: Root, t, prime: Optional[int] = None) -> np.ndarray:
    return alg.root_group_element(g, t, prime)


def complete_sl2_triple(alg: ChevalleyAlgebra, e: AlgebraElement, h: AlgebraElement) -> AlgebraElement:
    """Solve [e, f] = h for f in the (-2)-eigenspace of ad h."""
    e._check(h)
    p = e.prime
    deg = alg.cartan_degrees(h)
    mtwo = -2 if p is None else (-2) % p
    he = alg.bracket(h, e)
    if not (he == e.scale(2)):
        raise NotCharacteristicError("[h, e] != 2e")
    cols = [k for k in range(alg.dim) if deg[k] == mtwo]
    if p is None:
        f = _solve_f_rational(alg, e, h, cols)
    else:
        A = alg.ad(e)[:, cols]
        sol = linalg.solve_mod(A, h.coeffs, p) if cols else None
        if sol is None:
            raise NotCharacteristicError("no f with [e, f] = h")
        f = alg.zero(p)
        f.coeffs[cols] = sol
    if not (alg.bracket(e, f) == h):
        raise NotCharacteristicError("no f with [e, f] = h")
    assert alg.bracket(h, f) == f.scale(-2)
    return f


def _solve_f_rational(alg, e, h, cols) -> AlgebraElement:
    if not cols:
        raise NotCharacteristicError("no f with [e, f] = h")
    ints = all(Fraction(c).denominator == 1 for c in e.coeffs)
    if ints:
        # Solve mod a large prime, lift by rational reconstruction, verify exactly.
        eint = np.array([int(c) for c in e.coeffs], dtype=np.int64)
        A = alg.ad_int(eint)[:, cols]
        for p in (linalg.DEFAULT_PRIME, 2**31 - 1):
            sol = linalg.solve_mod(np.mod(A, p), linalg.as_mod(h.coeffs, p), p)
            if sol is None:
                break
            lifted = [linalg.rational_reconstruct(int(v), p) for v in sol]
            if any(v is None for v in lifted):
                continue
            f = alg.zero(None)
            for k, v in zip(cols, lifted):
                f.coeffs[k] = v
            if alg.bracket(e, f) == h:
                return f
    A = alg.ad(e)[:, cols]
    sol = linalg.solve_q(A.tolist(), list(h.coeffs))
    if sol is None:
        raise NotCharacteristicError("no f with [e, f] = h")
    f = alg.zero(None)
    for k, v in zip(cols, sol):
        f.coeffs[k] = v
    return f
