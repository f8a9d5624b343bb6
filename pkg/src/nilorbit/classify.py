"""Nilpotent orbits: partition recipes and certified weighted Dynkin diagrams.

A labeling is certified when, for a generic e in g<2>, the element h of the
labeling lies in [e, g<-2>]; then {e, h, f} is an sl2-triple with dominant
h, so the labeling is the weighted Dynkin diagram of G.e.  The weaker test
"dim z(e) = dim g<0> + dim g<1> and [g<0>, e] = g<2>" is also evaluated and
must agree on every accepted labeling, but it alone accepts e.g. (2,0) in A2.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from sympy.utilities.iterables import partitions as _sympy_partitions

from . import linalg
from .chevalley import (AlgebraElement, ChevalleyAlgebra, NotCharacteristicError,
                        build_algebra, complete_sl2_triple)
from .grading import (GradedDecomposition, WeightedDiagram, dims_prefilter,
                      generic_element, grade)
from .rootsys import RootSystem, SimpleType, build_root_system


class PartitionError(ValueError):
    pass


class CertificationError(RuntimeError):
    """An F_p-certified labeling failed the exact sl2 completion."""


@dataclass
class OrbitRecord:
    diagram: WeightedDiagram
    dim_orbit: int
    height: int
    graded_dims: dict[int, int]
    partition: Optional[tuple[int, ...]] = None
    variant: Optional[int] = None
    spherical: Optional[bool] = None
    index_z: Optional[int] = None
    gamma_data: Optional[dict] = None
    triple: Optional[tuple[AlgebraElement, AlgebraElement, AlgebraElement]] = field(
        default=None, repr=False, compare=False)

    def __post_init__(self):
        g = self.graded_dims
        total = sum(g.values())
        if self.dim_orbit != total - g.get(0, 0) - g.get(1, 0):
            raise AssertionError("orbit dimension inconsistent with the grading")
        if self.height < 2:
            raise AssertionError("nonzero orbits have height at least 2")

    @property
    def labels(self) -> tuple[int, ...]:
        return self.diagram.labels

    def name(self, numbering: str = "internal") -> str:
        if self.partition is not None:
            s = "(" + ",".join(str(x) for x in self.partition) + ")"
            if self.variant is not None:
                s += "I" if self.variant == 0 else "II"
            return s
        labs = self.diagram.paper_labels() if numbering == "paper" else self.labels
        return "".join(str(x) for x in labs)

    def to_json(self, numbering: str = "internal") -> dict:
        labs = self.diagram.paper_labels() if numbering == "paper" else self.labels
        out = {
            "diagram": list(labs),
            "partition": list(self.partition) if self.partition else None,
            "variant": self.variant,
            "dim": self.dim_orbit,
            "height": self.height,
            "graded_dims": {str(k): v for k, v in sorted(self.graded_dims.items())},
            "spherical": self.spherical,
            "index": self.index_z,
        }
        if self.gamma_data is not None:
            out["gamma"] = self.gamma_data
        return out


# ---------------------------------------------------------------- partitions

def _family_n(stype: SimpleType) -> int:
    """Size of the natural representation."""
    f, r = stype.family, stype.rank
    return {"A": r + 1, "B": 2 * r + 1, "C": 2 * r, "D": 2 * r}[f]


def integer_partitions(n: int) -> list[tuple[int, ...]]:
    out = []
    for p in _sympy_partitions(n):
        out.append(tuple(sorted(itertools.chain.from_iterable(
            [k] * m for k, m in p.items()), reverse=True)))
    return out


def is_admissible(stype: SimpleType, partition: Sequence[int]) -> bool:
    part = tuple(partition)
    if sum(part) != _family_n(stype) or any(x <= 0 for x in part):
        return False
    mult = Counter(part)
    if stype.family in "BD":
        return all(m % 2 == 0 for k, m in mult.items() if k % 2 == 0)
    if stype.family == "C":
        return all(m % 2 == 0 for k, m in mult.items() if k % 2 == 1)
    return stype.family == "A"


def is_very_even(stype: SimpleType, partition: Sequence[int]) -> bool:
    return stype.family == "D" and all(x % 2 == 0 for x in partition)


def admissible_partitions(stype: SimpleType, include_zero: bool = False) -> list[tuple[int, ...]]:
    if stype.family not in "ABCD":
        raise PartitionError(f"{stype} is not classical")
    out = [p for p in integer_partitions(_family_n(stype)) if is_admissible(stype, p)]
    if not include_zero:
        out = [p for p in out if max(p) > 1]
    return out


def _eigenvalues(partition: Sequence[int]) -> list[int]:
    vals = []
    for d in partition:
        vals.extend(range(d - 1, -d, -2))
    return sorted(vals, reverse=True)


def partition_labels(stype: SimpleType, partition: Sequence[int], variant: int = 0) -> tuple[int, ...]:
    """Labels of the h attached to a partition (no certification)."""
    if not is_admissible(stype, partition):
        raise PartitionError(f"{tuple(partition)} is not a valid partition for {stype}")
    f, n = stype.family, stype.rank
    ev = _eigenvalues(partition)
    if f == "A":
        return tuple(ev[i] - ev[i + 1] for i in range(n))
    h = ev[:n]
    labels = [h[i] - h[i + 1] for i in range(n - 1)]
    if f == "B":
        labels.append(h[n - 1])
    elif f == "C":
        labels.append(2 * h[n - 1])
    else:
        labels.append(h[n - 2] + h[n - 1])
        if variant:
            if not is_very_even(stype, partition):
                raise PartitionError("only very even partitions have a second orbit")
            labels[n - 2], labels[n - 1] = labels[n - 1], labels[n - 2]
    if variant and f != "D":
        raise PartitionError("variants exist only for very even D partitions")
    return tuple(labels)


def classical_diagram(stype: SimpleType | str, partition: Sequence[int], variant: int = 0,
                      prime: int = linalg.DEFAULT_PRIME, seed: int = 0) -> WeightedDiagram:
    """Certified diagram of the orbit with the given partition."""
    if isinstance(stype, str):
        stype = SimpleType.parse(stype)
    labels = partition_labels(stype, partition, variant)
    alg = build_algebra(build_root_system(stype))
    d = WeightedDiagram(alg.rs, labels)
    cd = certify(alg, d, prime=prime, seed=seed)
    if cd is None:
        raise CertificationError(f"partition diagram {labels} failed certification")
    return cd


# ---------------------------------------------------------------- certification

@dataclass
class CharTestResult:
    ok: bool
    stab_ok: bool
    e: Optional[AlgebraElement] = None
    f: Optional[AlgebraElement] = None


def _characteristic_mod(alg: ChevalleyAlgebra, gd: GradedDecomposition, prime: int,
                        rng: np.random.Generator, trials: int) -> CharTestResult:
    p = prime
    h = gd.characteristic.to_mod(p)
    g0, g2, gm2 = gd.indices(0), gd.indices(2), gd.indices(-2)
    z_expected = gd.dim(0) + gd.dim(1)
    stab_any = False
    for _ in range(trials):
        e = generic_element(gd, 2, p, rng=rng)
        A = alg.ad(e)
        stab = (alg.dim - linalg.rank_mod(A, p) == z_expected
                and linalg.rank_mod(A[np.ix_(g2, g0)], p) == len(g2))
        stab_any |= stab
        sol = linalg.solve_mod(A[np.ix_(g0, gm2)], h.coeffs[g0], p)
        if sol is not None:
            if not stab:
                raise AssertionError(f"sl2 completion without the centraliser identity at "
                                     f"{gd.diagram}")
            f = alg.zero(p)
            f.coeffs[gm2] = sol
            return CharTestResult(True, True, e, f)
    return CharTestResult(False, stab_any)


def stab_conditions(alg: ChevalleyAlgebra, d: WeightedDiagram, prime: int = linalg.DEFAULT_PRIME,
                    seed: int = 0, trials: int = 3) -> bool:
    """The weaker centraliser-dimension and surjectivity test on its own."""
    gd = grade(alg, d)
    if not gd.indices(2):
        return False
    return _characteristic_mod(alg, gd, prime, np.random.default_rng(seed), trials).stab_ok


def is_characteristic(alg: ChevalleyAlgebra, d: WeightedDiagram, prime: int = linalg.DEFAULT_PRIME,
                      seed: int = 0, trials: int = 3, exact: bool = False) -> bool:
    if not any(d.labels):
        return False
    gd = grade(alg, d)
    if not gd.indices(2):
        return False
    res = _characteristic_mod(alg, gd, prime, np.random.default_rng(seed), trials)
    if res.ok and exact:
        exact_triple(alg, d, seed)
    return res.ok


def certify(alg: ChevalleyAlgebra, d: WeightedDiagram, prime: int = linalg.DEFAULT_PRIME,
            seed: int = 0, trials: int = 3, exact: bool = False) -> Optional[WeightedDiagram]:
    """Certified copy of ``d`` or None."""
    if is_characteristic(alg, d, prime, seed, trials, exact):
        return d.as_certified()
    return None


_TRIPLE_CACHE: dict = {}


def exact_triple(alg: ChevalleyAlgebra, d: WeightedDiagram, seed: int = 0,
                 attempts: int = 8) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    """An sl2-triple over Q with e in g<2> having small integer coefficients.

    Raises CertificationError if no attempt completes; a labeling that passed
    the F_p test must never end up here.
    """
    key = (str(alg.rs.stype), d.labels, seed)
    if key in _TRIPLE_CACHE:
        return _TRIPLE_CACHE[key]
    gd = grade(alg, d)
    h = gd.characteristic
    idx = gd.indices(2)
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        e = alg.zero(None)
        for k, v in zip(idx, rng.integers(1, 60, size=len(idx))):
            e.coeffs[k] = Fraction(int(v))
        try:
            f = complete_sl2_triple(alg, e, h)
        except NotCharacteristicError:
            continue
        _TRIPLE_CACHE[key] = (e, h, f)
        return e, h, f
    raise CertificationError(f"exact sl2 completion failed for {alg.rs.stype} {d}")


# ---------------------------------------------------------------- enumeration

def make_record(alg: ChevalleyAlgebra, d: WeightedDiagram) -> OrbitRecord:
    gd = grade(alg, d)
    dims = {i: gd.dim(i) for i in sorted(gd.pieces)}
    return OrbitRecord(diagram=d, dim_orbit=alg.dim - gd.dim(0) - gd.dim(1),
                       height=gd.height, graded_dims=dims)


def _partition_lookup(stype: SimpleType) -> dict[tuple[int, ...], tuple[tuple[int, ...], Optional[int]]]:
    table = {}
    for part in admissible_partitions(stype):
        variants = (0, 1) if is_very_even(stype, part) else (0,)
        for v in variants:
            labels = partition_labels(stype, part, v)
            table[labels] = (part, v if len(variants) == 2 else None)
    return table


def enumerate_orbits(alg: ChevalleyAlgebra, prime: int = linalg.DEFAULT_PRIME, seed: int = 0,
                     trials: int = 3, exact: bool = False) -> list[OrbitRecord]:
    """All nonzero nilpotent orbits, sorted by (dimension, labels)."""
    r = alg.rank
    if r > 8:
        raise ValueError("enumeration is limited to rank <= 8")
    cand = np.array(list(itertools.product((0, 1, 2), repeat=r))[1:], dtype=np.int64)
    cand = cand[dims_prefilter(alg, cand)]
    records = []
    for labels in cand.tolist():
        d = WeightedDiagram(alg.rs, tuple(labels))
        cd = certify(alg, d, prime, seed, trials, exact)
        if cd is not None:
            records.append(make_record(alg, cd))
    if alg.rs.stype.family in "ABCD":
        lookup = _partition_lookup(alg.rs.stype)
        for rec in records:
            part, var = lookup.get(rec.labels, (None, None))
            rec.partition, rec.variant = part, var
    if exact:
        for rec in records:
            rec.triple = exact_triple(alg, rec.diagram, seed)
    records.sort(key=lambda rec: (rec.dim_orbit, rec.labels))
    return records


@lru_cache(maxsize=None)
def cached_orbits(stype: str, prime: int = linalg.DEFAULT_PRIME, seed: int = 0,
                  trials: int = 3) -> tuple[OrbitRecord, ...]:
    alg = build_algebra(build_root_system(stype))
    return tuple(enumerate_orbits(alg, prime, seed, trials))


def minimal_diagram(rs: RootSystem) -> WeightedDiagram:
    """Labels alpha_i(h_theta) = (alpha_i, theta^vee) of the minimal orbit."""
    return WeightedDiagram(rs, tuple(int(rs.coroot_pairing(a, rs.theta)) for a in rs.simples))
