"""Nilpotent orbits of simple Lie algebras: exact Chevalley-basis computations."""

from .rootsys import SimpleType, build_root_system
from .chevalley import build_algebra
from .grading import WeightedDiagram, grade
from .classify import OrbitRecord, enumerate_orbits

__version__ = "0.1.0"
__all__ = ["SimpleType", "build_root_system", "build_algebra", "WeightedDiagram", "grade",
           "OrbitRecord", "enumerate_orbits"]
