"""The mirror surface Q_m: cube face codes, orientation and triangulation."""

from .qm import (
    build_qm,
    code_parity,
    face_provenance,
    free_pair,
    is_qm_quad,
    orient_qm,
    oriented_quad,
    qm_genus,
    qm_vertex_link,
    quad_cycle,
    split_quad,
    star_positions,
    triangulate_equivelar,
    vertex_code,
    vertex_id,
)

__all__ = [
    "build_qm",
    "code_parity",
    "face_provenance",
    "free_pair",
    "is_qm_quad",
    "orient_qm",
    "oriented_quad",
    "qm_genus",
    "qm_vertex_link",
    "quad_cycle",
    "split_quad",
    "star_positions",
    "triangulate_equivelar",
    "vertex_code",
    "vertex_id",
]
