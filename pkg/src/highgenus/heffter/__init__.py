"""Finite fields F_q with q = 4g+1 and Heffter's neighborly surfaces over them."""

from .field import IRREDUCIBLE_POLYNOMIALS, FiniteField, make_field
from .surface import (
    HeffterSurface,
    affine_automorphisms,
    check_dual_generator,
    check_self_dual_and_actions,
    check_self_duality,
    heffter_surface,
    stellar_triangulation,
    vertex_degree_split,
)

__all__ = [
    "IRREDUCIBLE_POLYNOMIALS",
    "FiniteField",
    "HeffterSurface",
    "affine_automorphisms",
    "check_dual_generator",
    "check_self_dual_and_actions",
    "check_self_duality",
    "heffter_surface",
    "make_field",
    "stellar_triangulation",
    "vertex_degree_split",
]
