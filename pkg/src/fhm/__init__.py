"""Exact computations in the centraliser Farahat-Higman algebras FH_m."""
from .perm import Permutation, compose
from .intpoly import IntPoly, interpolate
from .shapes import MarkedCycleShape, class_size, count_shapes, enumerate_shapes, parse_shape, shape_of
from .grpalg import GroupAlgebraElement, class_sum, decompose, jm, pair_count
from .fh import FHElement, fh_mul, project, structure_polynomial
from .hecke import HSElement, phi, phi_inverse

__all__ = [
    "Permutation", "compose", "IntPoly", "interpolate", "MarkedCycleShape", "class_size",
    "count_shapes", "enumerate_shapes", "parse_shape", "shape_of", "GroupAlgebraElement",
    "class_sum", "decompose", "jm", "pair_count", "FHElement", "fh_mul", "project",
    "structure_polynomial", "HSElement", "phi", "phi_inverse",
]
__version__ = "0.1.0"
