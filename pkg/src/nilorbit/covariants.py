"""Canonical strings of roots and the weight monoid of height-2 orbits.

For a height-2 orbit with grading g = g<-2> + ... + g<2>, the upper
canonical string is built greedily in Delta<2>: start from theta and keep
adding the maximal root orthogonal to everything chosen so far.  The
partial sums lambda_i = gamma_1 + ... + gamma_i are the weights of free
generators of the monoid, with degrees 1, 2, ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .chevalley import ChevalleyAlgebra
from .classify import OrbitRecord
from .grading import grade
from .rootsys import (Root, RootSystem, format_weight, internal_to_paper,
                      to_fundamental_coords)


class CovariantError(ValueError):
    pass


@dataclass(frozen=True)
class CanonicalString:
    gammas: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.gammas)


@dataclass(frozen=True)
class GammaMonoid:
    """Free generators (fundamental coordinates of lambda_i, degree i)."""

    generators: tuple[tuple[tuple, int], ...]

    @property
    def weights(self) -> list[tuple]:
        return [w for w, _ in self.generators]


def _key(r: Root):
    return (r.height, r.coeffs)


def _greedy(rs: RootSystem, delta2: Sequence[Root], pick_max: bool) -> list[Root]:
    cands = sorted(set(delta2), key=_key)
    chosen: list[Root] = []
    while cands:
        g = cands[-1] if pick_max else cands[0]
        for other in cands:
            ok = rs.dominates(g, other) if pick_max else rs.dominates(other, g)
            if not ok:
                raise CovariantError(f"{g.coeffs} is not comparable with {other.coeffs}")
        chosen.append(g)
        cands = [r for r in cands if r != g and rs.inner(r, g) == 0]
    return chosen


def upper_canonical_string(rs: RootSystem, delta2: Sequence[Root]) -> CanonicalString:
    if rs.theta not in set(delta2):
        raise CovariantError("theta is not in Delta<2>")
    gammas = _greedy(rs, delta2, pick_max=True)
    for i, g in enumerate(gammas):
        if not g.is_positive or not rs.is_long(g):
            raise CovariantError(f"gamma_{i + 1} is not a long positive root")
        if i and g.height >= gammas[i - 1].height:
            raise CovariantError("heights of the string are not strictly decreasing")
    return CanonicalString(tuple(gammas))


def lower_canonical_string(rs: RootSystem, delta2: Sequence[Root]) -> CanonicalString:
    """Mirror image of the greedy construction, starting from the minimal root."""
    return CanonicalString(tuple(_greedy(rs, delta2, pick_max=False)))


def check_disjoint_support(gm: GammaMonoid | Sequence[Sequence]) -> bool:
    weights = gm.weights if isinstance(gm, GammaMonoid) else [tuple(w) for w in gm]
    seen: set[int] = set()
    for w in weights:
        supp = {i for i, c in enumerate(w) if c != 0}
        if supp & seen:
            return False
        seen |= supp
    return True


def gamma_monoid(rs: RootSystem, ucs: CanonicalString) -> GammaMonoid:
    gens = []
    acc = [0] * rs.dim_ambient
    for i, g in enumerate(ucs.gammas, start=1):
        acc = [a + b for a, b in zip(acc, g.coords)]
        fc = to_fundamental_coords(rs, acc)
        if any(c < 0 for c in fc):
            raise CovariantError(f"lambda_{i} = {fc} is not dominant")
        gens.append((fc, i))
    gm = GammaMonoid(tuple(gens))
    if not check_disjoint_support(gm):
        raise CovariantError("generator weights have overlapping supports")
    return gm


def saturation_window(gm: GammaMonoid, bound: int = 3) -> bool:
    """Dominant Z-combinations with |c_j| <= bound are N-combinations.

    The weights have disjoint supports, so they are linearly independent and a
    Z-combination is an N-combination iff every coefficient is >= 0.
    """
    W = np.array([[int(c) for c in w] for w in gm.weights], dtype=np.int64)
    r = W.shape[0]
    rng = np.arange(-bound, bound + 1)
    C = np.array(list(itertools.product(rng, repeat=r)), dtype=np.int64)
    comb = C @ W
    dominant = (comb >= 0).all(axis=1)
    return bool((C[dominant] >= 0).all())


# ---------------------------------------------------------------- reports

def _ambient_int(rs: RootSystem, r: Root) -> list:
    return [int(c) if c.denominator == 1 else str(c) for c in r.coords]


def describe_root(rs: RootSystem, r: Root, numbering: str = "paper") -> list:
    """Epsilon coordinates for classical types, coefficient vector otherwise."""
    if rs.stype.family in "ABCD":
        return _ambient_int(rs, r)
    coeffs = internal_to_paper(rs.stype, r.coeffs) if numbering == "paper" else r.coeffs
    return list(coeffs)


def weight_dict(rs: RootSystem, fc: Sequence, numbering: str = "paper") -> dict[str, int]:
    if numbering == "paper":
        fc = internal_to_paper(rs.stype, tuple(fc))
    return {str(i): int(c) for i, c in enumerate(fc, start=1) if c}


def orbit_delta2(alg: ChevalleyAlgebra, orbit: OrbitRecord) -> list[Root]:
    return grade(alg, orbit.diagram).roots(2)


def table1_report(alg: ChevalleyAlgebra, orbit: OrbitRecord, numbering: str = "paper") -> dict:
    """Canonical string and generator weights of a height-2 orbit."""
    if orbit.height != 2:
        raise CovariantError(f"height {orbit.height} orbit has no canonical-string report")
    rs = alg.rs
    gd = grade(alg, orbit.diagram)
    delta2 = gd.roots(2)
    ucs = upper_canonical_string(rs, delta2)
    gm = gamma_monoid(rs, ucs)
    lcs = lower_canonical_string(rs, delta2)
    even = gd.dim(1) == 0
    if even and set(lcs.gammas) != set(ucs.gammas):
        raise CovariantError("upper and lower canonical strings differ on an even orbit")
    labels = orbit.diagram.paper_labels() if numbering == "paper" else orbit.labels
    row = {
        "type": str(rs.stype),
        "diagram": list(labels),
        "partition": list(orbit.partition) if orbit.partition else None,
        "variant": orbit.variant,
        "ucs": [describe_root(rs, g, numbering) for g in ucs.gammas],
        "generators": [{"weight": weight_dict(rs, w, numbering), "degree": d}
                       for w, d in gm.generators],
        "generators_text": [format_weight(w, numbering, rs.stype) for w in gm.weights],
        "disjoint_support": check_disjoint_support(gm),
        "saturated_window": saturation_window(gm),
        "even": even,
        "lcs_equals_ucs": set(lcs.gammas) == set(ucs.gammas),
    }
    return row


def very_even_rows(alg: ChevalleyAlgebra, partition: Sequence[int],
                   records: Sequence[OrbitRecord]) -> list[dict]:
    """Both rows for a very even D partition; 'in_table' flags the first variant."""
    rows = []
    for rec in records:
        if rec.partition == tuple(partition):
            row = table1_report(alg, rec)
            row["in_table"] = rec.variant == 0
            rows.append(row)
    return rows
