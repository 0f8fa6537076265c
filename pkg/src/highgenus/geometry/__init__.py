"""Exact geometry: the deformed cube, its projection, hull and Schlegel diagram."""

from .deformed_cube import (
    DEFAULT_EPSILON,
    build_deformed_cube,
    check_closed_form_dependency,
    check_induction_bound,
    closed_form_dependency,
    cube_vertex,
    cube_vertices,
    dependency_oracle,
    kernel_check_Am,
    limit_matrix,
    preservation_certificate,
    project_to_R4,
    verify_cube_combinatorics,
)
from .hull import (
    check_hull,
    convex_hull,
    face_closure,
    hull4,
    is_edge,
    is_face,
    is_vertex,
    polytope_summary,
    two_face_check,
)
from .realize import Realization, certify_quads, realize, realize_surface, triangulate_mesh
from .schlegel import choose_viewpoint, schlegel_map, schlegel_scene

__all__ = [
    "DEFAULT_EPSILON",
    "Realization",
    "build_deformed_cube",
    "certify_quads",
    "check_closed_form_dependency",
    "check_hull",
    "check_induction_bound",
    "choose_viewpoint",
    "closed_form_dependency",
    "convex_hull",
    "cube_vertex",
    "cube_vertices",
    "dependency_oracle",
    "face_closure",
    "hull4",
    "is_edge",
    "is_face",
    "is_vertex",
    "kernel_check_Am",
    "limit_matrix",
    "polytope_summary",
    "preservation_certificate",
    "project_to_R4",
    "realize",
    "realize_surface",
    "schlegel_map",
    "schlegel_scene",
    "triangulate_mesh",
    "verify_cube_combinatorics",
]
