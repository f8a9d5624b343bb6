"""Per-orbit analytics: centralisers, sphericity, index, odd-top checks.

All generic computations run over F_p with elements drawn from a seeded
numpy Generator; exact certificates come from classify.exact_triple.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from . import linalg
from .chevalley import AlgebraElement, ChevalleyAlgebra
from .classify import OrbitRecord, _characteristic_mod, exact_triple
from .grading import GradedDecomposition, generic_element, grade


class AnalysisError(ValueError):
    pass


@dataclass
class GenericTriple:
    gd: GradedDecomposition
    e: AlgebraElement
    h: AlgebraElement
    f: AlgebraElement
    prime: int


def generic_triple(alg: ChevalleyAlgebra, orbit: OrbitRecord, prime: int,
                   rng: np.random.Generator, trials: int = 3) -> GenericTriple:
    """sl2-triple mod p with e generic in g<2>."""
    gd = grade(alg, orbit.diagram)
    res = _characteristic_mod(alg, gd, prime, rng, trials)
    if not res.ok:
        raise AnalysisError(f"{orbit.diagram} did not certify mod {prime}")
    return GenericTriple(gd, res.e, gd.characteristic.to_mod(prime), res.f, prime)


# ---------------------------------------------------------------- centralisers

def centralizer_basis(alg: ChevalleyAlgebra, x: AlgebraElement) -> list[AlgebraElement]:
    A = alg.ad(x)
    if x.prime is None:
        return [AlgebraElement(np.array(v, dtype=object), None) for v in linalg.nullspace_q(A.tolist())]
    Z = linalg.nullspace_mod(A, x.prime)
    return [AlgebraElement(Z[:, k].copy(), x.prime) for k in range(Z.shape[1])]


def orbit_dim(alg: ChevalleyAlgebra, x: AlgebraElement) -> int:
    A = alg.ad(x)
    if x.prime is None:
        return linalg.rank_q(A.tolist())
    return linalg.rank_mod(A, x.prime)


@dataclass
class CentralizerData:
    orbit: OrbitRecord = field(repr=False)
    z_dim: int
    z_graded_dims: dict[int, int]
    k_dim: int
    index_z: Optional[int] = None

    def to_json(self) -> dict:
        return {"z_dim": self.z_dim, "k_dim": self.k_dim, "index": self.index_z,
                "z_graded_dims": {str(k): v for k, v in sorted(self.z_graded_dims.items())}}


def _k_basis(alg: ChevalleyAlgebra, t: GenericTriple) -> np.ndarray:
    """Columns: basis of z_{g<0>}(e) ∩ z_{g<0>}(f) in full coordinates."""
    p = t.prime
    g0 = t.gd.indices(0)
    M = np.vstack([alg.ad(t.e)[:, g0], alg.ad(t.f)[:, g0]])
    N = linalg.nullspace_mod(M, p)
    K = np.zeros((alg.dim, N.shape[1]), dtype=np.int64)
    K[g0] = N
    return K


def centralizer_data(alg: ChevalleyAlgebra, orbit: OrbitRecord, prime: int = linalg.DEFAULT_PRIME,
                     seed: int = 0) -> CentralizerData:
    rng = np.random.default_rng(seed)
    t = generic_triple(alg, orbit, prime, rng)
    A = alg.ad(t.e)
    gd = t.gd
    z_dim = alg.dim - linalg.rank_mod(A, prime)
    graded = {}
    for i in range(-gd.height, gd.height + 1):
        src, dst = gd.indices(i), gd.indices(i + 2)
        r = linalg.rank_mod(A[np.ix_(dst, src)], prime) if src and dst else 0
        if len(src) - r:
            graded[i] = len(src) - r
    k_dim = _k_basis(alg, t).shape[1]
    return CentralizerData(orbit, z_dim, graded, k_dim)


def check_centralizer_structure(alg: ChevalleyAlgebra, orbit: OrbitRecord,
                                prime: int = linalg.DEFAULT_PRIME, seed: int = 0) -> dict:
    """Centraliser dimension identity, graded dims, and bijectivity of (ad e)^i."""
    rng = np.random.default_rng(seed)
    t = generic_triple(alg, orbit, prime, rng)
    gd, p = t.gd, prime
    A = alg.ad(t.e)
    cd = centralizer_data(alg, orbit, prime, seed)
    failures = []
    if cd.z_dim != gd.dim(0) + gd.dim(1):
        failures.append(f"dim z = {cd.z_dim} != {gd.dim(0) + gd.dim(1)}")
    if sum(cd.z_graded_dims.values()) != cd.z_dim:
        failures.append("graded centraliser dims do not add up")
    for i, v in cd.z_graded_dims.items():
        if i < 0:
            failures.append(f"z has a component in degree {i}")
        elif v != gd.dim(i) - gd.dim(i + 2):
            failures.append(f"dim z<{i}> = {v} != {gd.dim(i) - gd.dim(i + 2)}")
    for i in range(-gd.height, gd.height + 1):
        src, dst = gd.indices(i - 2), gd.indices(i)
        if not src or not dst:
            continue
        r = linalg.rank_mod(A[np.ix_(dst, src)], p)
        if i <= 1 and r != len(src):
            failures.append(f"ad e: g<{i - 2}> -> g<{i}> not injective")
        if i >= 1 and r != len(dst):
            failures.append(f"ad e: g<{i - 2}> -> g<{i}> not surjective")
    P = np.eye(alg.dim, dtype=np.int64)
    for i in range(1, gd.height + 1):
        P = linalg.matmul_mod(A, P, p)
        src, dst = gd.indices(-i), gd.indices(i)
        if linalg.rank_mod(P[np.ix_(dst, src)], p) != len(src) or len(src) != len(dst):
            failures.append(f"(ad e)^{i}: g<{-i}> -> g<{i}> not bijective")
    return {"ok": not failures, "failures": failures, "centralizer": cd.to_json()}


# ---------------------------------------------------------------- sphericity

def conjugate(alg: ChevalleyAlgebra, x: AlgebraElement, rng: np.random.Generator,
              factors: Optional[int] = None) -> AlgebraElement:
    """Apply a random product of root-group elements exp(t ad e_g)."""
    roots = alg.rs.all_roots
    if factors is None:
        factors = 2 * alg.n_pos
    p = x.prime
    for _ in range(factors):
        g = roots[int(rng.integers(len(roots)))]
        x = alg.root_group_apply(g, int(rng.integers(1, p)), x)
    return x


def borel_orbit_dim(alg: ChevalleyAlgebra, x: AlgebraElement) -> int:
    A = alg.ad(x)
    return linalg.rank_mod(A[:, alg.borel_indices], x.prime)


def is_spherical(alg: ChevalleyAlgebra, orbit: OrbitRecord, prime: int = linalg.DEFAULT_PRIME,
                 seed: int = 0, conj_rounds: int = 8) -> bool:
    """True iff some conjugate of a generic e has dim b.x = dim G.e."""
    rng = np.random.default_rng(seed)
    t = generic_triple(alg, orbit, prime, rng)
    best = 0
    for _ in range(conj_rounds):
        x = conjugate(alg, t.e, rng)
        best = max(best, borel_orbit_dim(alg, x))
        if best == orbit.dim_orbit:
            return True
    return False


# ---------------------------------------------------------------- index

def skew_form_matrix(alg: ChevalleyAlgebra, xi: np.ndarray, prime: int) -> np.ndarray:
    """B[i, j] = xi([b_i, b_j]) mod p."""
    B = np.zeros((alg.dim, alg.dim), dtype=np.int64)
    vals = np.mod(alg.tC * xi[alg.tK], prime)
    np.add.at(B, (alg.tI, alg.tJ), vals)
    return np.mod(B, prime)


def index_of_centralizer(alg: ChevalleyAlgebra, orbit: OrbitRecord,
                         prime: int = linalg.DEFAULT_PRIME, seed: int = 0, trials: int = 3) -> int:
    rng = np.random.default_rng(seed)
    t = generic_triple(alg, orbit, prime, rng)
    Z = linalg.nullspace_mod(alg.ad(t.e), prime)
    m = Z.shape[1]
    best = 0
    for _ in range(trials):
        xi = rng.integers(0, prime, size=alg.dim, dtype=np.int64)
        B = skew_form_matrix(alg, xi, prime)
        M = linalg.matmul_mod(np.ascontiguousarray(Z.T), linalg.matmul_mod(B, Z, prime), prime)
        if np.any(np.mod(M + M.T, prime)):
            raise AssertionError("form matrix on the centraliser is not skew")
        r = linalg.rank_mod(M, prime)
        if r % 2:
            raise AssertionError("skew matrix with odd rank")
        best = max(best, r)
    return m - best


# ---------------------------------------------------------------- odd top

@dataclass
class OddTopReport:
    top: int
    dim_top: int
    k_dim: int
    k_open_orbit: bool
    l_transitive: bool
    vectors_tested: int
    sp_image_dim: Optional[int]
    sp_expected: Optional[int]
    killing_pairing: bool

    @property
    def ok(self) -> bool:
        sp_ok = self.sp_image_dim is None or self.sp_image_dim == self.sp_expected
        return (self.k_open_orbit and self.l_transitive and self.killing_pairing and sp_ok
                and self.dim_top % 2 == 0)

    def to_json(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def check_odd_top(alg: ChevalleyAlgebra, orbit: OrbitRecord, prime: int = linalg.DEFAULT_PRIME,
                  seed: int = 0, random_vectors: int = 10) -> OddTopReport:
    if orbit.height % 2 == 0:
        raise AnalysisError(f"height {orbit.height} is even")
    p = prime
    rng = np.random.default_rng(seed)
    t = generic_triple(alg, orbit, prime, rng)
    gd = t.gd
    top = gd.height
    tix, g0 = gd.indices(top), gd.indices(0)
    n = len(tix)
    K = _k_basis(alg, t)

    def l_rank(v: AlgebraElement) -> int:
        return linalg.rank_mod(alg.ad(v)[np.ix_(tix, g0)], p)

    v = generic_element(gd, top, p, rng=rng)
    kv = linalg.matmul_mod(alg.ad(v)[tix], K, p)
    k_open = linalg.rank_mod(kv, p) == n

    samples = [alg.basis_element(k, p) for k in tix]
    samples += [generic_element(gd, top, p, rng=rng) for _ in range(random_vectors)]
    l_trans = all(l_rank(s) == n for s in samples)

    sp_dim = sp_exp = None
    if top == 3:
        # image of k -> End(g<3>), y -> ad(y)|g<3>
        rows = []
        for c in range(K.shape[1]):
            y = AlgebraElement(K[:, c].copy(), p)
            rows.append(alg.ad(y)[np.ix_(tix, tix)].ravel())
        sp_dim = linalg.rank_mod(np.array(rows, dtype=np.int64), p) if rows else 0
        sp_exp = n * (n + 1) // 2

    G = alg.killing_gram
    pair = linalg.rank_mod(G[np.ix_(tix, gd.indices(-top))], p) == n
    return OddTopReport(top, n, K.shape[1], k_open, l_trans, len(samples), sp_dim, sp_exp, pair)


# ---------------------------------------------------------------- report

def analyze_orbit(alg: ChevalleyAlgebra, orbit: OrbitRecord, prime: int = linalg.DEFAULT_PRIME,
                  seed: int = 0, conj_rounds: int = 8, trials: int = 3,
                  exact: bool = True) -> dict:
    """Fill spherical/index on the record and return the JSON report."""
    if exact:
        orbit.triple = exact_triple(alg, orbit.diagram, seed)
    orbit.spherical = is_spherical(alg, orbit, prime, seed, conj_rounds)
    orbit.index_z = index_of_centralizer(alg, orbit, prime, seed, trials)
    cs = check_centralizer_structure(alg, orbit, prime, seed)
    rep = orbit.to_json()
    rep["z_graded_dims"] = cs["centralizer"]["z_graded_dims"]
    rep["k_dim"] = cs["centralizer"]["k_dim"]
    rep["structure_ok"] = cs["ok"]
    rep["odd_top_checks"] = (check_odd_top(alg, orbit, prime, seed).to_json()
                             if orbit.height % 2 else None)
    return rep


# ---------------------------------------------------------------- theorems

def theorem_suite(alg: ChevalleyAlgebra, orbits, prime: int = linalg.DEFAULT_PRIME,
                  seeds=(0,), conj_rounds: int = 8, trials: int = 3,
                  structure: bool = True) -> dict:
    """Sphericity versus height, index on height <= 3, centraliser structure
    and the odd-top properties, over the given certified orbits."""
    rows = []
    failures = []
    for rec in orbits:
        gd = grade(alg, rec.diagram)
        gd.check_symmetry()
        row = {"orbit": rec.name("paper"), "dim": rec.dim_orbit, "height": rec.height,
               "spherical": [], "index": None}
        expect = rec.height <= 3
        for s in seeds:
            sph = is_spherical(alg, rec, prime, s, conj_rounds)
            row["spherical"].append(sph)
            if sph != expect:
                failures.append(f"{row['orbit']}: spherical={sph} at height {rec.height} (seed {s})")
        if expect:
            ind = index_of_centralizer(alg, rec, prime, seeds[0], trials)
            row["index"] = ind
            if ind != alg.rank:
                failures.append(f"{row['orbit']}: index {ind} != rank {alg.rank}")
        if structure:
            cs = check_centralizer_structure(alg, rec, prime, seeds[0])
            failures += [f"{row['orbit']}: {f}" for f in cs["failures"]]
            if rec.height % 2:
                ot = check_odd_top(alg, rec, prime, seeds[0])
                row["odd_top_ok"] = ot.ok
                if not ot.ok:
                    failures.append(f"{row['orbit']}: odd-top checks failed")
        rows.append(row)
    return {"type": str(alg.rs.stype), "prime": prime, "seeds": list(seeds), "orbits": rows,
            "ok": not failures, "failures": failures}
