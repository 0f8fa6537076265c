"""Tests for exact pairwise face intersection."""

from fractions import Fraction

from highgenus.checks import PairwiseCheck, check_pairwise, polygon_intersection
from highgenus.checks.pairwise import face_plane
from highgenus.geometry.linalg import vec
from highgenus.models import EmbeddedMesh


def mesh_of(points, faces):
    return EmbeddedMesh(vertices=tuple(vec(p) for p in points), faces=tuple(faces))


def test_cube_has_no_improper_pairs(cube_mesh):
    """Test that faces of the cube meet only in shared vertices and edges."""
    assert check_pairwise(cube_mesh, threads=1)


def test_coplanar_overlap():
    """Test two overlapping triangles in one plane give a 2-dimensional witness."""
    half = Fraction(1, 2)
    mesh = mesh_of(
        [(0, 0, 0), (2, 0, 0), (0, 2, 0), (half, half, 0), (3, half, 0), (half, 3, 0)],
        [(0, 1, 2), (3, 4, 5)],
    )
    verdict = check_pairwise(mesh, threads=1)
    assert not verdict
    (failure,) = verdict.witness["failures"]
    assert failure["faces"] == [0, 1]
    assert failure["shared"] == []
    assert failure["dimension"] == 2


def test_piercing_triangle():
    """Test a triangle crossing another along a segment."""
    q = Fraction(1, 4)
    h = Fraction(1, 2)
    mesh = mesh_of(
        [(0, 0, 0), (2, 0, 0), (0, 2, 0), (q, q, -1), (q, q, 1), (h, h, 0)],
        [(0, 1, 2), (3, 4, 5)],
    )
    verdict = check_pairwise(mesh, threads=1)
    assert not verdict
    (failure,) = verdict.witness["failures"]
    assert failure["dimension"] == 1
    assert failure["points"] == [["1/4", "1/4", "0"], ["1/2", "1/2", "0"]]


def test_shared_edge_intersection_is_the_edge():
    """Test that two faces hinged on an edge meet in exactly that segment."""
    p = [vec(x) for x in [(0, 0, 0), (1, 0, 0), (0, 1, 0)]]
    q = [vec(x) for x in [(0, 0, 0), (1, 0, 0), (0, 0, 1)]]
    points = polygon_intersection(p, face_plane(p), q, face_plane(q))
    assert points == [vec((0, 0, 0)), vec((1, 0, 0))]


def test_disjoint_parallel_faces():
    """Test that parallel faces in different planes do not meet."""
    p = [vec(x) for x in [(0, 0, 0), (1, 0, 0), (0, 1, 0)]]
    q = [vec(x) for x in [(0, 0, 1), (1, 0, 1), (0, 1, 1)]]
    assert polygon_intersection(p, face_plane(p), q, face_plane(q)) == []


def test_shared_diagonal_is_reported():
    """Test that two faces sharing two non-adjacent vertices fail."""
    mesh = mesh_of(
        [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (1, 1, 1)],
        [(0, 1, 2, 3), (0, 2, 4)],
    )
    verdict = check_pairwise(mesh, threads=1)
    assert not verdict
    assert verdict.witness["failures"][0]["shared"] == [0, 2]


def test_worker_processes_agree():
    """Test that the parallel path finds the same witnesses as the serial one."""
    half = Fraction(1, 2)
    mesh = mesh_of(
        [(0, 0, 0), (2, 0, 0), (0, 2, 0), (half, half, 0), (3, half, 0), (half, 3, 0),
         (5, 5, 5), (6, 5, 5), (5, 6, 5)],
        [(0, 1, 2), (3, 4, 5), (6, 7, 8)],
    )
    serial = [v.witness for v in PairwiseCheck(threads=1).test(mesh)]
    parallel = [v.witness for v in PairwiseCheck(threads=2).test(mesh)]
    assert serial == parallel
    assert len(serial) == 1
