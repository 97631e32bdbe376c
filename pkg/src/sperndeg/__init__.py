"""Exact degree computations for labelled triangulations.

The package computes boundary degrees of vertex labellings, cover sets of
points in convex polytopes, and checks the lower bounds on fully labelled
simplices and complementary edges that these degrees imply.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .complex import Triangulation, build_triangulation, euler_characteristic
from .cover import Polytope, cov, make_polytope, pebble_set
from .degree import boundary_degree, boundary_map_degree, cycle_degree, map_degree_at, mod2_degree, pair_degree
from .errors import SperndegError
from .kernels import BACKEND
from .labelling import Labelling, SignedLabelling

__all__ = [
    "BACKEND",
    "Labelling",
    "Polytope",
    "SignedLabelling",
    "SperndegError",
    "Triangulation",
    "boundary_degree",
    "boundary_map_degree",
    "build_triangulation",
    "cov",
    "cycle_degree",
    "euler_characteristic",
    "make_polytope",
    "map_degree_at",
    "mod2_degree",
    "pair_degree",
    "pebble_set",
]
