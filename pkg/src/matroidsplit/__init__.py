"""Bit-parallel binary matroid toolkit: splitting operations, minor search,
a gammoid decision procedure, and an exhaustive verification harness."""

from ._kernel import BACKEND
from .gf2 import Gf2Matrix, null_space_min_supports, rank, row_space_contains, rref
from .matroid import BinaryMatroid, Graph, MinorWitness, k4_matroid
from .ops import (
    add_loops,
    admissible_pairs,
    element_splitting,
    splitting,
    three_fold,
    three_fold_ghafari,
    three_fold_steps,
)

__all__ = [
    "BACKEND",
    "Gf2Matrix",
    "rank",
    "rref",
    "row_space_contains",
    "null_space_min_supports",
    "BinaryMatroid",
    "Graph",
    "MinorWitness",
    "k4_matroid",
    "splitting",
    "element_splitting",
    "add_loops",
    "three_fold",
    "three_fold_steps",
    "three_fold_ghafari",
    "admissible_pairs",
]

__version__ = "0.1.0"
