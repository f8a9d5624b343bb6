"""Z-gradings of g defined by weighted Dynkin diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

import numpy as np

from . import linalg
from .chevalley import AlgebraElement, ChevalleyAlgebra
from .rootsys import Root, RootSystem, internal_to_paper, paper_to_internal


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedDiagram:
    """Labels alpha_i(h) on the simple roots, internal numbering."""

    rs: RootSystem = field(compare=False, repr=False)
    labels: tuple[int, ...]
    certified: bool = field(default=False, compare=False)

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.rs.rank:
            raise GradingError(f"expected {self.rs.rank} labels, got {len(labels)}")
        if any(x not in (0, 1, 2) for x in labels):
            raise GradingError(f"labels must lie in {{0,1,2}}: {labels}")

    @classmethod
    def from_paper(cls, rs: RootSystem, labels) -> "WeightedDiagram":
        return cls(rs, paper_to_internal(rs.stype, tuple(labels)))

    def paper_labels(self) -> tuple[int, ...]:
        return internal_to_paper(self.rs.stype, self.labels)

    def as_certified(self) -> "WeightedDiagram":
        return WeightedDiagram(self.rs, self.labels, certified=True)

    def is_even(self) -> bool:
        return all(x != 1 for x in self.labels)

    def doubled(self) -> "WeightedDiagram":
        if any(x > 1 for x in self.labels):
            raise GradingError("doubling leaves the label range")
        return WeightedDiagram(self.rs, tuple(2 * x for x in self.labels))

    def key(self) -> str:
        return "".join(str(x) for x in self.labels)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.labels) + ")"


def root_degree(d: WeightedDiagram, r: Root) -> int:
    return sum(c * x for c, x in zip(r.coeffs, d.labels))


class GradedDecomposition:
    """Eigenspace split of g under ad h for the diagram's h."""

    def __init__(self, alg: ChevalleyAlgebra, diagram: WeightedDiagram):
        if diagram.rs is not alg.rs:
            raise GradingError("diagram and algebra use different root systems")
        self.alg = alg
        self.diagram = diagram
        self.degrees = alg.root_coeffs @ np.array(diagram.labels, dtype=np.int64)
        self.pieces: dict[int, list[int]] = {}
        for k, deg in enumerate(self.degrees.tolist()):
            self.pieces.setdefault(deg, []).append(k)
        self.height = max(self.pieces)

    def indices(self, i: int) -> list[int]:
        return self.pieces.get(i, [])

    def dim(self, i: int) -> int:
        return len(self.pieces.get(i, ()))

    def roots(self, i: int) -> list[Root]:
        return [self.alg.roots_by_index[k] for k in self.indices(i)
                if k in self.alg.roots_by_index]

    def indices_range(self, lo: int, hi: int) -> list[int]:
        return [k for k, deg in enumerate(self.degrees.tolist()) if lo <= deg <= hi]

    def dims(self) -> dict[int, int]:
        return {i: self.dim(i) for i in range(-self.height, self.height + 1)}

    def render(self) -> str:
        h = self.height
        vals = ", ".join(str(self.dim(i)) for i in range(-h, h + 1))
        return f"dims[{-h}..{h}] = {vals}"

    @cached_property
    def characteristic(self) -> AlgebraElement:
        return characteristic_element(self.alg, self.diagram)

    def check_symmetry(self) -> None:
        for i in range(1, self.height + 1):
            if self.dim(i) != self.dim(-i):
                raise AssertionError(f"dim g<{i}> != dim g<{-i}>")
        if sum(self.dim(i) for i in self.pieces) != self.alg.dim:
            raise AssertionError("graded dimensions do not add up")
        if self.diagram.certified:
            for i in range(1, self.height + 1, 2):
                if self.dim(i) % 2:
                    raise AssertionError(f"odd-degree piece g<{i}> has odd dimension")


def grade(alg: ChevalleyAlgebra, d: WeightedDiagram) -> GradedDecomposition:
    return GradedDecomposition(alg, d)


def height_of(gd: GradedDecomposition) -> int:
    return gd.height


def characteristic_element(alg: ChevalleyAlgebra, d: WeightedDiagram) -> AlgebraElement:
    """The Cartan element h with alpha_j(h) = labels_j, over Q."""
    cartan = alg.rs.cartan
    # alpha_j(h_i) = (alpha_j, alpha_i^vee) = cartan[j][i]
    c = linalg.solve_q(cartan, list(d.labels))
    h = alg.zero(None)
    for i, v in enumerate(c):
        h.coeffs[alg.cartan_indices[i]] = Fraction(v)
    return h


def generic_element(gd: GradedDecomposition, i: int, prime: int,
                    seed: Optional[int] = None, rng: Optional[np.random.Generator] = None
                    ) -> AlgebraElement:
    """Element of g<i> with independent uniform nonzero coefficients mod prime."""
    idx = gd.indices(i)
    if not idx:
        raise GradingError(f"g<{i}> is zero")
    if rng is None:
        rng = np.random.default_rng(seed)
    x = gd.alg.zero(prime)
    x.coeffs[idx] = rng.integers(1, prime, size=len(idx), dtype=np.int64)
    return x


def dims_prefilter(alg: ChevalleyAlgebra, label_matrix: np.ndarray) -> np.ndarray:
    """Vectorised necessary condition for characteristic labelings.

    Surjectivity of ad e: g<i-2> -> g<i> for i >= 1 forces
    dim g<j> >= dim g<j+2> for every j >= -1, and g<2> must be nonzero.
    """
    degs = alg.root_coeffs @ label_matrix.T   # (dim, n_candidates)
    top = int(degs.max()) if degs.size else 0
    counts = np.stack([(degs == j).sum(axis=0) for j in range(-1, top + 3)])
    # counts[j+1] = dim g<j>; Cartan rows have degree 0 automatically
    ok = counts[3] > 0
    for j in range(-1, top + 1):
        ok &= counts[j + 1] >= counts[j + 3]
    return ok
