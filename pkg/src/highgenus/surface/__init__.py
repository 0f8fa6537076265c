"""Cell surfaces: validation, analysis, intersection condition, duals and isomorphisms."""

from .core import (
    analyze,
    check_intersection_condition,
    coherent_orientation,
    dual_surface,
    edges,
    f_vector,
    faces_around_vertices,
    is_coherently_oriented,
    max_genus_bound,
    validate_surface,
    vertex_degrees,
)
from .isomorphism import find_isomorphism

__all__ = [
    "analyze",
    "check_intersection_condition",
    "coherent_orientation",
    "dual_surface",
    "edges",
    "f_vector",
    "faces_around_vertices",
    "find_isomorphism",
    "is_coherently_oriented",
    "max_genus_bound",
    "validate_surface",
    "vertex_degrees",
]
