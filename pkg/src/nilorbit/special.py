"""The grading by h_theta, the quartic F and the height-3 orbit O.

Requires the highest root to be a fundamental weight (types B_n (n >= 3),
D_n (n >= 4), E6, E7, E8, F4, G2).  Two independent routes produce points of
O: grading by the diagram of special_orbit_diagram, and a line search on the
hypersurface F = 0 inside g<1>_theta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from sympy import Poly, symbols

from . import linalg
from .chevalley import AlgebraElement, ChevalleyAlgebra, complete_sl2_triple
from .classify import certify, make_record, minimal_diagram
from .grading import WeightedDiagram, generic_element, grade
from .rootsys import RootSystem, beta_root, is_theta_fundamental


class SpecialError(ValueError):
    pass


class RetryExhausted(RuntimeError):
    pass


# ---------------------------------------------------------------- theta grading

@dataclass
class ThetaGrading:
    alg: ChevalleyAlgebra = field(repr=False)
    degrees: np.ndarray = field(repr=False)
    pieces: dict[int, list[int]]

    def indices(self, i: int) -> list[int]:
        return self.pieces.get(i, [])

    def dim(self, i: int) -> int:
        return len(self.pieces.get(i, ()))

    def dims(self) -> list[int]:
        return [self.dim(i) for i in range(-2, 3)]

    def check(self) -> None:
        if self.dim(2) != 1 or self.dim(-2) != 1:
            raise AssertionError("g<2>_theta must be the line of e_theta")
        if self.dim(1) % 2:
            raise AssertionError("g<1>_theta must be even-dimensional")


def theta_grading(alg: ChevalleyAlgebra) -> ThetaGrading:
    rs = alg.rs
    degs = np.zeros(alg.dim, dtype=np.int64)
    for k, r in alg.roots_by_index.items():
        degs[k] = int(rs.coroot_pairing(r, rs.theta))
    pieces: dict[int, list[int]] = {}
    for k, d in enumerate(degs.tolist()):
        pieces.setdefault(d, []).append(k)
    return ThetaGrading(alg, degs, pieces)


def heisenberg_check(alg: ChevalleyAlgebra, tg: ThetaGrading) -> bool:
    """[g<1>, g<1>] lies in k e_theta and the centre of g<>=1> is k e_theta."""
    theta_idx = alg.root_index[alg.rs.theta.coeffs]
    g1 = set(tg.indices(1))
    for i, j, k in zip(alg.tI.tolist(), alg.tJ.tolist(), alg.tK.tolist()):
        if i in g1 and j in g1 and k != theta_idx:
            return False
    pos = tg.indices(1) + tg.indices(2)
    # centre: kernel of x -> ([x, b])_b over b in g<>=1>
    p = linalg.DEFAULT_PRIME
    rows = [np.mod(alg.ad_basis[b].toarray()[:, pos], p) for b in pos]
    M = np.vstack(rows)
    Z = linalg.nullspace_mod(M, p)
    return Z.shape[1] == 1 and pos[int(np.flatnonzero(Z[:, 0])[0])] == theta_idx \
        and np.count_nonzero(Z[:, 0]) == 1


def _require_fundamental(rs: RootSystem) -> int:
    if not is_theta_fundamental(rs):
        raise SpecialError(f"highest root of {rs.stype} is not fundamental")
    return beta_root(rs)


# ---------------------------------------------------------------- quartic

def _in_theta_one(alg: ChevalleyAlgebra, tg: ThetaGrading, x: AlgebraElement) -> None:
    outside = set(x.support) - set(tg.indices(1))
    if outside:
        raise SpecialError("x is not in g<1>_theta")


def quartic_F(alg: ChevalleyAlgebra, x: AlgebraElement, tg: Optional[ThetaGrading] = None):
    """F(x) = Phi((ad x)^4 e_{-theta}, e_{-theta})."""
    _require_fundamental(alg.rs)
    tg = tg or theta_grading(alg)
    _in_theta_one(alg, tg, x)
    v = alg.e(-alg.rs.theta, x.prime)
    w = v
    for _ in range(4):
        w = alg.bracket(x, w)
    return alg.killing(w, v)


def dF(alg: ChevalleyAlgebra, x: AlgebraElement, y: AlgebraElement):
    """Differential of F at x in direction y, by the closed formula."""
    v = alg.e(-alg.rs.theta, x.prime)
    x2 = alg.bracket(x, alg.bracket(x, v))
    x3 = alg.bracket(x, x2)
    a = alg.killing(alg.bracket(y, x3), v)
    b = alg.killing(alg.bracket(x, alg.bracket(y, x2)), v)
    if x.prime is None:
        return 2 * a + 2 * b
    return (2 * a + 2 * b) % x.prime


def _line_poly(alg: ChevalleyAlgebra, x0: AlgebraElement, x1: AlgebraElement,
               tg: ThetaGrading) -> list[int]:
    """Coefficients c_0..c_4 of t -> F(x0 + t x1) mod p."""
    p = x0.prime
    ts = list(range(5))
    vals = [quartic_F(alg, x0 + x1.scale(t), tg) for t in ts]
    V = np.array([[pow(t, k, p) for k in range(5)] for t in ts], dtype=np.int64)
    c = linalg.solve_mod(V, np.array(vals, dtype=np.int64), p)
    return [int(v) for v in c]


def directional_derivative(alg: ChevalleyAlgebra, x: AlgebraElement, y: AlgebraElement,
                           tg: Optional[ThetaGrading] = None) -> int:
    """Coefficient of t in F(x + t y), from exact interpolation mod p."""
    return _line_poly(alg, x, y, tg or theta_grading(alg))[1]


def power_ranks(alg: ChevalleyAlgebra, x: AlgebraElement, upto: int = 5) -> list[int]:
    """[rank (ad x)^k for k = 1..upto] mod p."""
    p = x.prime
    A = alg.ad(x)
    P = A.copy()
    out = [linalg.rank_mod(P, p)]
    for _ in range(upto - 1):
        if not P.any():
            out.append(0)
            continue
        P = linalg.matmul_mod(A, P, p)
        out.append(linalg.rank_mod(P, p))
    return out


def height_mod(alg: ChevalleyAlgebra, x: AlgebraElement) -> int:
    r = power_ranks(alg, x, 5)
    return sum(1 for v in r if v)


# ---------------------------------------------------------------- diagrams

def special_orbit_diagram(rs: RootSystem) -> WeightedDiagram:
    """Label 1 on the Dynkin neighbours of beta, 0 elsewhere."""
    b = _require_fundamental(rs)
    adj = set(rs.adjacent(b))
    return WeightedDiagram(rs, tuple(int(i in adj) for i in range(rs.rank)))


def tilde_diagram(rs: RootSystem) -> WeightedDiagram:
    return minimal_diagram(rs).doubled()


# ---------------------------------------------------------------- O elements

@dataclass
class OElement:
    x: AlgebraElement
    route: str
    F: int
    dF_nonzero: bool
    power_ranks: list[int]

    @property
    def height(self) -> int:
        return sum(1 for v in self.power_ranks if v)


def find_O_element_structural(alg: ChevalleyAlgebra, prime: int = linalg.DEFAULT_PRIME,
                              seed: int = 0) -> OElement:
    d = special_orbit_diagram(alg.rs)
    gd = grade(alg, d)
    e = generic_element(gd, 2, prime, seed=seed)
    return OElement(e, "diagram", 0, False, power_ranks(alg, e))


def find_O_element(alg: ChevalleyAlgebra, prime: int = linalg.DEFAULT_PRIME, seed: int = 0,
                   max_attempts: int = 50) -> OElement:
    """Point of the dense L-orbit in {F = 0} of g<1>_theta, by line search."""
    _require_fundamental(alg.rs)
    tg = theta_grading(alg)
    rng = np.random.default_rng(seed)
    t = symbols("t")
    gd1 = _ThetaPieces(alg, tg)
    for _ in range(max_attempts):
        x0 = generic_element(gd1, 1, prime, rng=rng)
        x1 = generic_element(gd1, 1, prime, rng=rng)
        c = _line_poly(alg, x0, x1, tg)
        if not any(c[1:]):
            continue
        roots = Poly(list(reversed(c)), t, modulus=prime).ground_roots()
        for r in roots:
            x = x0 + x1.scale(int(r) % prime)
            if quartic_F(alg, x, tg) != 0:
                raise AssertionError("root of the line polynomial is not on {F = 0}")
            y = generic_element(gd1, 1, prime, rng=rng)
            df = dF(alg, x, y)
            if df == 0:
                continue
            return OElement(x, "line-search", 0, True, power_ranks(alg, x))
    raise RetryExhausted("no smooth point of {F = 0} found")


class _ThetaPieces:
    """Adapter so generic_element can sample the theta grading."""

    def __init__(self, alg: ChevalleyAlgebra, tg: ThetaGrading):
        self.alg = alg
        self.tg = tg

    def indices(self, i: int) -> list[int]:
        return self.tg.indices(i)


def theta_sample(alg: ChevalleyAlgebra, tg: ThetaGrading, prime: int,
                 rng: np.random.Generator, kind: str) -> AlgebraElement:
    """Random nonzero element of g<1>_theta: 'generic', 'sparse' or 'root'."""
    idx = tg.indices(1)
    x = alg.zero(prime)
    if kind == "generic":
        x.coeffs[idx] = rng.integers(1, prime, size=len(idx))
    elif kind == "sparse":
        k = int(rng.integers(1, min(4, len(idx)) + 1))
        pick = rng.choice(idx, size=k, replace=False)
        x.coeffs[pick] = rng.integers(1, prime, size=k)
    elif kind == "root":
        x.coeffs[int(rng.choice(idx))] = 1
    else:
        raise ValueError(kind)
    return x


def L_orbit_dim(alg: ChevalleyAlgebra, tg: ThetaGrading, x: AlgebraElement) -> int:
    A = alg.ad(x)
    return linalg.rank_mod(A[np.ix_(tg.indices(1), tg.indices(0))], x.prime)


# ---------------------------------------------------------------- bigrading

@dataclass
class BiGradingMatrix:
    dims: dict[tuple[int, int], int]
    a: int
    b: int
    c: int
    d: int
    total: int

    def matrix_text(self) -> str:
        lines = []
        for j in range(2, -3, -1):
            cells = [str(self.dims.get((i, j), 0) or ".").rjust(4) for i in range(-3, 4)]
            lines.append(f"{j:>3} |" + "".join(cells))
        lines.append("    +" + "-" * 28)
        lines.append("j/i  " + "".join(str(i).rjust(4) for i in range(-3, 4)))
        return "\n".join(lines)

    def hexagon(self) -> dict[tuple[int, int], int]:
        """Nonzero entries moved to column 2i - 3j."""
        return {(2 * i - 3 * j, j): v for (i, j), v in self.dims.items() if v}

    def hexagon_text(self) -> str:
        hx = self.hexagon()
        lines = []
        for j in range(2, -3, -1):
            cells = [str(hx[(c, j)]).rjust(4) if (c, j) in hx else "    " for c in range(-4, 5)]
            lines.append(f"{j:>3} |" + "".join(cells).rstrip())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"dims": {f"{i},{j}": v for (i, j), v in sorted(self.dims.items())},
                "a": self.a, "b": self.b, "c": self.c, "d": self.d, "total": self.total}


_VANISH = ([(i, -2) for i in range(-2, 4)] + [(i, -1) for i in range(1, 4)] + [(3, 0)])
_CORNERS = [(3, 2), (3, 1), (0, 1), (0, -1), (-3, -1), (-3, -2)]


def bigrading(alg: ChevalleyAlgebra, e: Optional[AlgebraElement] = None) -> BiGradingMatrix:
    """Dimension table of the refinement by (h, h_theta).

    h is the characteristic of the special diagram; x = e_theta spans part of
    g<3> and {e_theta, h_theta, e_{-theta}} is the exact triple with
    h_theta in g<0>.  Checks the vanishing pattern, corners, c = 0, b = a.
    """
    rs = alg.rs
    d = special_orbit_diagram(rs)
    gd = grade(alg, d)
    theta_idx = alg.root_index[rs.theta.coeffs]
    if theta_idx not in gd.indices(3):
        raise SpecialError("e_theta is not in g<3>")
    x = alg.e(rs.theta)
    ht = alg.h_root(rs.theta)
    y = complete_sl2_triple(alg, x, ht)
    if not (y == alg.e(-rs.theta)):
        raise AssertionError("triple completion of e_theta is not e_{-theta}")
    if e is not None:
        bad = [k for k in e.support if gd.degrees[k] != 2]
        if bad:
            raise SpecialError("e is not in g<2> of the special grading")
    tg = theta_grading(alg)
    dims: dict[tuple[int, int], int] = {}
    for k in range(alg.dim):
        key = (int(gd.degrees[k]), int(tg.degrees[k]))
        dims[key] = dims.get(key, 0) + 1
    for key, v in dims.items():
        if dims.get((-key[0], -key[1]), 0) != v:
            raise AssertionError(f"central symmetry fails at {key}")
    for key in _VANISH:
        if dims.get(key, 0):
            raise AssertionError(f"g<{key}> should vanish")
    for key in _CORNERS:
        if dims.get(key, 0) != 1:
            raise AssertionError(f"g<{key}> should be one-dimensional")
    a = dims.get((2, 1), 0)
    for key in [(-1, -1), (1, 1), (-2, -1)]:
        if dims.get(key, 0) != a:
            raise AssertionError(f"dim g<{key}> != a")
    b, c, dd = dims.get((1, 0), 0), dims.get((2, 0), 0), dims.get((0, 0), 0)
    if c != 0 or b != a:
        raise AssertionError(f"expected c = 0 and b = a, got a={a} b={b} c={c}")
    for i in range(-3, 4):
        if sum(v for (ii, _), v in dims.items() if ii == i) != gd.dim(i):
            raise AssertionError("row sums do not reproduce the h-grading")
    for j in range(-2, 3):
        if sum(v for (_, jj), v in dims.items() if jj == j) != tg.dim(j):
            raise AssertionError("column sums do not reproduce the h_theta grading")
    total = sum(dims.values())
    if total != alg.dim:
        raise AssertionError("bigraded dimensions do not add up")
    if e is not None and e.prime is not None:
        z = alg.dim - linalg.rank_mod(alg.ad(e), e.prime)
        if z != 2 + a + b + dd:
            raise AssertionError("dim z(e) != 2 + a + b + d")
    return BiGradingMatrix(dims, a, b, c, dd, total)


def g2_closure_check(alg: ChevalleyAlgebra, prime: int = linalg.DEFAULT_PRIME, seed: int = 0,
                     draws: int = 3) -> dict:
    """Dimension of the subalgebra generated by the six corner root vectors
    together with a generic element of bidegree (2, 1).

    A root vector in place of the generic element cannot work in simply laced
    types (root-vector generated subalgebras have simply laced root systems),
    so those dimensions are only reported.
    """
    rs = alg.rs
    d = special_orbit_diagram(rs)
    gd = grade(alg, d)
    tg = theta_grading(alg)
    corner, middle = [], []
    for k in alg.roots_by_index:
        key = (int(gd.degrees[k]), int(tg.degrees[k]))
        if key in _CORNERS:
            corner.append(k)
        elif key == (2, 1):
            middle.append(k)
    rng = np.random.default_rng(seed)
    cgens = [alg.basis_element(k, prime) for k in corner]
    generic = []
    for _ in range(draws):
        e = alg.zero(prime)
        e.coeffs[middle] = rng.integers(1, prime, size=len(middle))
        generic.append(_generated_dim(alg, cgens + [e], prime))
    root_dims = sorted({_generated_dim(alg, cgens + [alg.basis_element(m, prime)], prime)
                        for m in middle})
    return {"generic": generic, "root_vector_dims": root_dims,
            "corner_dim": _generated_dim(alg, cgens, prime),
            "ok": all(v == 14 for v in generic)}


def _generated_dim(alg: ChevalleyAlgebra, gens: list[AlgebraElement], p: int) -> int:
    basis = np.array([g.coeffs for g in gens], dtype=np.int64)
    r = linalg.rank_mod(basis, p)
    rows = basis
    while True:
        new = [alg.bracket(AlgebraElement(u.copy(), p), AlgebraElement(v.copy(), p)).coeffs
               for u in rows for v in basis]
        stacked = np.vstack([basis] + [np.array(new, dtype=np.int64)])
        rr, piv = linalg.rref_mod(stacked, p)
        nb = rr[:len(piv)]
        if len(piv) == r:
            return r
        r = len(piv)
        rows = nb
        basis = nb


# ---------------------------------------------------------------- suite

def special_suite(alg: ChevalleyAlgebra, prime: int = linalg.DEFAULT_PRIME, seed: int = 0,
                  samples: int = 200, orbit_samples: int = 20) -> dict:
    """All checks attached to O, its neighbour O~ and F for one algebra."""
    rs = alg.rs
    _require_fundamental(rs)
    rng = np.random.default_rng(seed)
    out: dict = {"type": str(rs.stype)}
    fails: list[str] = []

    tg = theta_grading(alg)
    tg.check()
    out["theta_dims"] = tg.dims()
    if not heisenberg_check(alg, tg):
        fails.append("g<>=1>_theta is not Heisenberg")

    d = special_orbit_diagram(rs)
    cd = certify(alg, d, prime, seed, exact=True)
    out["O_diagram"] = list(d.labels)
    if cd is None:
        fails.append("special diagram not certified")
        out["ok"] = False
        out["failures"] = fails
        return out
    rec = make_record(alg, cd)
    gd = grade(alg, cd)
    out["O_height"] = rec.height
    out["O_dim"] = rec.dim_orbit
    out["O_dims"] = gd.render()
    if rec.height != 3:
        fails.append(f"special diagram has height {rec.height}")
    if gd.dim(3) != 2:
        fails.append(f"dim g<3> = {gd.dim(3)}")
    if gd.dim(1) != 2 * gd.dim(2):
        fails.append("dim g<1> != 2 dim g<2>")

    td = tilde_diagram(rs)
    ctd = certify(alg, td, prime, seed, exact=True)
    out["Otilde_diagram"] = list(td.labels)
    if ctd is None:
        fails.append("doubled minimal diagram not certified")
    else:
        trec = make_record(alg, ctd)
        out["Otilde_dim"] = trec.dim_orbit
        if trec.dim_orbit - rec.dim_orbit != 2:
            fails.append("O is not of codimension 2 in the closure of O~")
        xt = theta_sample(alg, tg, prime, rng, "generic")
        pr = power_ranks(alg, xt)
        out["Otilde_power_ranks"] = pr
        if pr[0] != trec.dim_orbit or pr[3] != 1 or pr[2] != 2 or pr[4] != 0:
            fails.append(f"generic point of g<1>_theta has power ranks {pr}")

    # F versus height 4 on sampled points
    kinds = ["generic"] * (samples // 2) + ["sparse"] * (samples // 4) + ["root"] * (samples // 8)
    pts = [theta_sample(alg, tg, prime, rng, k) for k in kinds]
    n_line = samples - len(pts)
    o_pts = []
    for s in range(n_line):
        o = find_O_element(alg, prime, int(rng.integers(1 << 30)))
        o_pts.append(o)
        pts.append(o.x)
    agree = 0
    nonzero_F = 0
    for x in pts:
        F = quartic_F(alg, x, tg)
        A = alg.ad(x)
        P = linalg.matmul_mod(A, linalg.matmul_mod(A, A, prime), prime)
        P4 = linalg.matmul_mod(A, P, prime)
        h4 = bool(P4.any())
        nonzero_F += F != 0
        agree += (F != 0) == h4
    out["F_samples"] = len(pts)
    out["F_nonzero"] = nonzero_F
    out["F_agree"] = agree
    if agree != len(pts):
        fails.append(f"F != 0 <=> (ad x)^4 != 0 failed on {len(pts) - agree} samples")

    # orbit dimension identity
    ok_dim = 0
    for x in pts[:orbit_samples // 2] + pts[-(orbit_samples - orbit_samples // 2):]:
        if linalg.rank_mod(alg.ad(x), prime) == 2 * L_orbit_dim(alg, tg, x) + 2:
            ok_dim += 1
    out["orbit_dim_identity"] = f"{ok_dim}/{orbit_samples}"
    if ok_dim != orbit_samples:
        fails.append("dim G.x = 2 dim L.x + 2 failed")

    # dF formula versus interpolated derivative, and K-invariance of F
    df_ok = 0
    inv_ok = 0
    k_roots = [alg.roots_by_index[k] for k in tg.indices(0) if k in alg.roots_by_index]
    for _ in range(10):
        x = theta_sample(alg, tg, prime, rng, "generic")
        y = theta_sample(alg, tg, prime, rng, "generic")
        df_ok += dF(alg, x, y) == directional_derivative(alg, x, y, tg)
        g = k_roots[int(rng.integers(len(k_roots)))]
        xg = alg.root_group_apply(g, int(rng.integers(1, prime)), x)
        inv_ok += quartic_F(alg, xg, tg) == quartic_F(alg, x, tg)
    out["dF_formula"] = f"{df_ok}/10"
    out["K_invariance"] = f"{inv_ok}/10"
    if df_ok != 10:
        fails.append("dF formula disagrees with the interpolated derivative")
    if inv_ok != 10:
        fails.append("F not invariant under root groups of k")

    # two routes to O agree
    o_line = o_pts[0] if o_pts else find_O_element(alg, prime, seed)
    o_diag = find_O_element_structural(alg, prime, seed)
    out["O_line_power_ranks"] = o_line.power_ranks
    out["O_diagram_power_ranks"] = o_diag.power_ranks
    if o_line.power_ranks != o_diag.power_ranks:
        fails.append("line-search and diagram routes give different orbits")
    if o_line.height != 3 or o_line.power_ranks[2] != 2:
        fails.append("line-search point is not of height 3 with rank (ad x)^3 = 2")
    if o_line.power_ranks[0] != rec.dim_orbit:
        fails.append("line-search point has the wrong orbit dimension")

    bg = bigrading(alg, o_diag.x)
    out["bigrading"] = bg.to_json()
    out["bigrading_text"] = bg.matrix_text()
    out["hexagon_text"] = bg.hexagon_text()
    if bg.dims.get((3, 2)) != 1 or bg.dims.get((3, 1)) != 1:
        fails.append("g<3,*> does not split as 1 + 1")

    g2 = g2_closure_check(alg, prime)
    out["g2_closure"] = g2
    if not g2["ok"]:
        fails.append(f"corners and generic e generate dimensions {g2['generic']}, not 14")
    out["rank_annotation"] = min(rs.rank, 4)
    out["failures"] = fails
    out["ok"] = not fails
    return out
