"""Exact ideal lattices of finite-dimensional Lie algebras over the rationals."""

from .exactnum import Subspace
from .families import build, catalog_upto_10, predict_count, predict_lattice
from .ideals import IdealSet, Status, enumerate_ideals, socle_report
from .lattice import FiniteLattice, lattice_of
from .lie import LieAlgebra, structure_report

__all__ = [
    "FiniteLattice",
    "IdealSet",
    "LieAlgebra",
    "Status",
    "Subspace",
    "build",
    "catalog_upto_10",
    "enumerate_ideals",
    "lattice_of",
    "predict_count",
    "predict_lattice",
    "socle_report",
    "structure_report",
]
