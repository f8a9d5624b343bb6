"""Irreducible root systems in exact rational coordinates.

Simple roots follow Bourbaki's numbering and his standard Euclidean models
(epsilon coordinates for the classical series, the 8-dimensional model for
E6, E7, E8).  Reference tables number the exceptional nodes differently
(the ``--numbering paper`` option); ``PAPER_TO_INTERNAL`` holds the per-type
permutation and is applied only when data enters or leaves.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# reference node i (1-based) -> internal Bourbaki node; identity if absent.
PAPER_TO_INTERNAL: dict[str, tuple[int, ...]] = {
    "E6": (1, 3, 4, 5, 6, 2),
    "E7": (7, 6, 5, 4, 3, 1, 2),
    "E8": (8, 7, 6, 5, 4, 3, 1, 2),
    "F4": (4, 3, 2, 1),
    "G2": (1, 2),
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        rule = _RANK_RULES.get(self.family)
        if rule is None or not isinstance(self.rank, int) or not rule(self.rank):
            raise RootSystemError(f"illegal simple type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", str(text))
        if not m:
            raise RootSystemError(f"cannot parse simple type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root, keyed by its coefficient vector on the simple roots."""

    coeffs: tuple[int, ...]
    coords: Vector = field(compare=False, repr=False)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs), tuple(-x for x in self.coords))


def dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(x, y)), Fraction(0))


def _eps(dim: int, *entries) -> Vector:
    v = [Fraction(0)] * dim
    for i, c in entries:
        v[i] += Fraction(c)
    return tuple(v)


def _simple_roots(st: SimpleType) -> list[Vector]:
    f, n = st.family, st.rank
    half = Fraction(1, 2)
    if f == "A":
        return [_eps(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    chain = [_eps(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
    if f == "B":
        return chain + [_eps(n, (n - 1, 1))]
    if f == "C":
        return chain + [_eps(n, (n - 1, 2))]
    if f == "D":
        return chain + [_eps(n, (n - 2, 1), (n - 1, 1))]
    if f == "G":
        return [_eps(3, (0, 1), (1, -1)), _eps(3, (0, -2), (1, 1), (2, 1))]
    if f == "F":
        return [
            _eps(4, (1, 1), (2, -1)),
            _eps(4, (2, 1), (3, -1)),
            _eps(4, (3, 1)),
            _eps(4, (0, half), (1, -half), (2, -half), (3, -half)),
        ]
    # E family: the first n simple roots of Bourbaki's E8 model.
    e8 = [_eps(8, (0, half), (7, half), *[(k, -half) for k in range(1, 7)]),
          _eps(8, (0, 1), (1, 1))]
    e8 += [_eps(8, (k, 1), (k - 1, -1)) for k in range(1, 7)]
    return e8[:n]


class RootSystem:
    """Full root system of a simple type; immutable after construction."""

    def __init__(self, stype: SimpleType):
        self.stype = stype
        self.rank = stype.rank
        self.simple_coords: list[Vector] = _simple_roots(stype)
        self.dim_ambient = len(self.simple_coords[0])
        n = self.rank
        self.gram = [[dot(a, b) for b in self.simple_coords] for a in self.simple_coords]
        # cartan[i][j] = (alpha_i, alpha_j^vee)
        self.cartan = [[int(2 * self.gram[i][j] / self.gram[j][j]) for j in range(n)]
                       for i in range(n)]
        for i in range(n):
            for j in range(n):
                if 2 * self.gram[i][j] / self.gram[j][j] != self.cartan[i][j]:
                    raise RootSystemError("non-integral Cartan entry")
        self._index: dict[tuple[int, ...], Root] = {}
        positive = self._close_positive()
        self.positive_roots: list[Root] = positive
        negative = sorted((-r for r in positive), key=lambda r: (r.height, r.coeffs))
        self.all_roots: list[Root] = negative + positive
        self._index = {r.coeffs: r for r in self.all_roots}
        self.simples: list[Root] = [self._index[tuple(int(i == j) for j in range(n))]
                                    for i in range(n)]
        self.theta: Root = max(positive, key=lambda r: (r.height, r.coeffs))
        self.fundamental_weights: list[Vector] = self._fundamental_weights()
        self.numbering = "internal-bourbaki"

    # ------------------------------------------------------------ building

    def coords_of(self, coeffs: Sequence) -> Vector:
        out = [Fraction(0)] * self.dim_ambient
        for c, a in zip(coeffs, self.simple_coords):
            if c:
                for k, x in enumerate(a):
                    out[k] += c * x
        return tuple(out)

    def _close_positive(self) -> list[Root]:
        n = self.rank
        found: set[tuple[int, ...]] = set()
        layer = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        ordered: list[tuple[int, ...]] = []
        while layer:
            layer = sorted(set(layer))
            found.update(layer)
            ordered.extend(layer)
            nxt = []
            for c in layer:
                for i in range(n):
                    # alpha_i-string through c: p steps down, q = p - <c, alpha_i^vee> up.
                    p = 0
                    down = list(c)
                    while True:
                        down[i] -= 1
                        if tuple(down) in found:
                            p += 1
                        else:
                            break
                    pair = sum(c[k] * self.cartan[k][i] for k in range(n))
                    if p - pair > 0:
                        up = list(c)
                        up[i] += 1
                        nxt.append(tuple(up))
            layer = nxt
        roots = [Root(c, self.coords_of(c)) for c in ordered]
        return sorted(roots, key=lambda r: (r.height, r.coeffs))

    def _fundamental_weights(self) -> list[Vector]:
        from .linalg import solve_q

        n = self.rank
        # varpi_i = sum_k M[i][k] alpha_k with M = cartan^{-1}
        out = []
        for i in range(n):
            rhs = [Fraction(int(i == j)) for j in range(n)]
            # sum_k M[i][k] cartan[k][j] = delta_ij  ->  cartan^T m = e_i
            at = [[Fraction(self.cartan[k][j]) for k in range(n)] for j in range(n)]
            m = solve_q(at, rhs)
            out.append(self.coords_of(m))
        return out

    # ------------------------------------------------------------ queries

    def root(self, coeffs: Sequence[int]) -> Root:
        try:
            return self._index[tuple(int(c) for c in coeffs)]
        except KeyError:
            raise RootSystemError(f"{tuple(coeffs)} is not a root of {self.stype}") from None

    def is_root(self, coeffs: Sequence[int]) -> bool:
        return tuple(coeffs) in self._index

    def inner(self, x, y) -> Fraction:
        """(x, y) for roots or ambient vectors."""
        xs = x.coords if isinstance(x, Root) else x
        ys = y.coords if isinstance(y, Root) else y
        return dot(xs, ys)

    def coroot_pairing(self, x, alpha) -> Fraction:
        """(x, alpha^vee) = 2 (x, alpha) / (alpha, alpha)."""
        return 2 * self.inner(x, alpha) / self.inner(alpha, alpha)

    def norm2(self, r) -> Fraction:
        return self.inner(r, r)

    def is_long(self, r: Root) -> bool:
        return self.norm2(r) == self.norm2(self.theta)

    @cached_property
    def long_norm2(self) -> Fraction:
        return self.norm2(self.theta)

    def adjacent(self, i: int) -> list[int]:
        """Internal indices (0-based) of Dynkin neighbours of node i."""
        return [j for j in range(self.rank) if j != i and self.cartan[i][j] != 0]

    def dominates(self, a: Root, b: Root) -> bool:
        """a >= b in the dominance order (a - b a non-negative root combination)."""
        return all(x >= y for x, y in zip(a.coeffs, b.coeffs))

    def to_json(self) -> str:
        return json.dumps({
            "type": str(self.stype),
            "numbering": self.numbering,
            "simple_roots": [[str(x) for x in a] for a in self.simple_coords],
            "cartan": self.cartan,
            "theta": list(self.theta.coeffs),
        })


def build_root_system(stype: SimpleType | str) -> RootSystem:
    """Cached per type, so equal types share one RootSystem instance."""
    if isinstance(stype, str):
        stype = SimpleType.parse(stype)
    return _root_system(stype)


@lru_cache(maxsize=None)
def _root_system(stype: SimpleType) -> RootSystem:
    return RootSystem(stype)


def to_fundamental_coords(rs: RootSystem, weight) -> tuple:
    """((weight, alpha_j^vee))_j, with integers where exact."""
    vec = weight.coords if isinstance(weight, Root) else tuple(Fraction(x) for x in weight)
    out = []
    for a in rs.simple_coords:
        v = 2 * dot(vec, a) / dot(a, a)
        out.append(int(v) if v.denominator == 1 else v)
    return tuple(out)


def is_theta_fundamental(rs: RootSystem) -> bool:
    fc = to_fundamental_coords(rs, rs.theta)
    return sorted(fc) == [0] * (rs.rank - 1) + [1]


def beta_root(rs: RootSystem) -> int:
    """Index of the unique simple root not orthogonal to theta."""
    if not is_theta_fundamental(rs):
        raise RootSystemError(f"highest root of {rs.stype} is not fundamental")
    hits = [i for i, a in enumerate(rs.simples) if rs.inner(rs.theta, a) > 0]
    if len(hits) != 1:
        raise RootSystemError("expected exactly one simple root with (theta, beta) > 0")
    i = hits[0]
    beta = rs.simples[i]
    assert rs.is_long(beta)
    assert not rs.is_root(tuple(t - 2 * b for t, b in zip(rs.theta.coeffs, beta.coeffs)))
    return i


# ---------------------------------------------------------------- numbering

def paper_perm(stype: SimpleType) -> tuple[int, ...]:
    return PAPER_TO_INTERNAL.get(str(stype), tuple(range(1, stype.rank + 1)))


def paper_to_internal(stype: SimpleType, values: Sequence) -> tuple:
    """Reorder a per-node vector given in reference numbering into internal order."""
    perm = paper_perm(stype)
    out = [None] * len(perm)
    for pi, ii in enumerate(perm):
        out[ii - 1] = values[pi]
    return tuple(out)


def internal_to_paper(stype: SimpleType, values: Sequence) -> tuple:
    perm = paper_perm(stype)
    return tuple(values[ii - 1] for ii in perm)


def node_to_paper(stype: SimpleType, i: int) -> int:
    """1-based internal node -> 1-based reference node."""
    return paper_perm(stype).index(i) + 1


def node_to_internal(stype: SimpleType, i: int) -> int:
    return paper_perm(stype)[i - 1]


def format_weight(fc: Sequence, numbering: str = "internal", stype: SimpleType | None = None) -> str:
    """Render fundamental coordinates as e.g. '2w1+w3'."""
    if numbering == "paper":
        fc = internal_to_paper(stype, fc)
    parts = []
    for i, c in enumerate(fc, start=1):
        if c == 0:
            continue
        coef = "" if c == 1 else ("-" if c == -1 else str(c))
        parts.append(f"{coef}w{i}")
    return "+".join(parts).replace("+-", "-") or "0"


def iter_types(spec: Iterable[str]) -> list[SimpleType]:
    return [SimpleType.parse(s) for s in spec]
