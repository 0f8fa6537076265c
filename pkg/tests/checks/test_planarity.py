"""Tests for the planarity and convexity checks."""

from fractions import Fraction

from highgenus.checks import ConvexityCheck, PlanarityCheck, check_planarity_convexity


def test_cube_faces_are_planar_and_convex(cube_mesh):
    """Test that the unit cube passes both checks."""
    assert check_planarity_convexity(cube_mesh)
    assert list(PlanarityCheck().test(cube_mesh)) == []
    assert list(ConvexityCheck().test(cube_mesh)) == []


def test_off_plane_vertex(cube_mesh):
    """Test that lifting one vertex breaks exactly the top face."""
    vertices = list(cube_mesh.vertices)
    vertices[7] = (Fraction(1), Fraction(1), Fraction(2))
    mesh = cube_mesh.model_copy(update={"vertices": tuple(vertices)})
    violations = list(PlanarityCheck().test(mesh))
    assert [v.witness["face"] for v in violations] == [5]
    assert violations[0].witness["rank"] == 3
    verdict = check_planarity_convexity(mesh)
    assert not verdict
    assert verdict.witness["face"] == 5
    assert verdict.witness["check"] == "PLN"


def test_bowtie_quad(cube_mesh):
    """Test that a planar quad listed in bowtie order is not convex."""
    faces = list(cube_mesh.faces)
    faces[0] = (0, 1, 2, 3)
    mesh = cube_mesh.model_copy(update={"faces": tuple(faces)})
    assert list(PlanarityCheck().test(mesh)) == []
    verdict = check_planarity_convexity(mesh)
    assert not verdict
    assert verdict.witness["check"] == "CVX"
    assert verdict.witness["face"] == 0


def test_collinear_and_short_faces(cube_mesh):
    """Test a face with collinear vertices and a face with two vertices."""
    vertices = (*cube_mesh.vertices, (Fraction(2), Fraction(0), Fraction(0)))
    mesh = cube_mesh.model_copy(update={"vertices": vertices, "faces": ((0, 4, 8), (0, 1))})
    convexity = list(ConvexityCheck().test(mesh))
    assert convexity[0].witness["face"] == 0
    assert "collinear" in convexity[0].message
    planarity = list(PlanarityCheck().test(mesh))
    assert planarity[0].witness["face"] == 1
