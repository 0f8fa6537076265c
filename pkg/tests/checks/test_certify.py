"""Tests for certificate assembly and check selection."""

from fractions import Fraction

import pytest

from highgenus.checks import (
    AllChecks,
    CombinatoricsCheck,
    ConvexityCheck,
    PairwiseCheck,
    PlanarityCheck,
    certify,
    get_selected_checks,
    instantiate_checks,
)
from highgenus.errors import DomainError
from highgenus.geometry import realize_surface, triangulate_mesh


def test_cube_certificate(cube_mesh):
    """Test that the unit cube is certified with genus 0."""
    certificate = certify(cube_mesh, threads=1)
    assert certificate.ok
    assert certificate.genus_from_mesh == 0
    assert certificate.failures == ()


def test_broken_cube_certificate(cube_mesh):
    """Test that a lifted vertex shows up as a planarity defect."""
    vertices = list(cube_mesh.vertices)
    vertices[7] = (Fraction(1), Fraction(1), Fraction(2))
    certificate = certify(cube_mesh.model_copy(update={"vertices": tuple(vertices)}), threads=1)
    assert not certificate.ok
    assert not certificate.planar_ok
    assert certificate.convex_ok
    assert certificate.defects[0]["face"] == 5


def test_non_surface_has_no_genus(cube_mesh):
    """Test that an open box gets no genus and a surface defect."""
    mesh = cube_mesh.model_copy(update={"faces": cube_mesh.faces[:5]})
    certificate = certify(mesh, threads=1)
    assert certificate.genus_from_mesh is None
    assert not certificate.ok
    assert certificate.defects[-1]["check"] == "surface"


@pytest.mark.parametrize("f0", [0, 3])
def test_realized_torus(f0):
    """Test that the m = 4 realization is an embedded torus for two base facets."""
    certificate = certify(realize_surface(4, f0=f0), threads=1)
    assert certificate.planar_ok
    assert certificate.convex_ok
    assert certificate.pairwise_ok
    assert certificate.combinatorics_ok
    assert certificate.genus_from_mesh == 1


def test_realized_triangulated_torus():
    """Test that the parity split of the realized torus stays embedded."""
    certificate = certify(triangulate_mesh(realize_surface(4)), threads=1)
    assert certificate.ok
    assert certificate.genus_from_mesh == 1


def test_wrong_diagonal_is_only_a_warning():
    """Test that a quad split along its other diagonal is still certified."""
    mesh = triangulate_mesh(realize_surface(4))
    (a, b, c), (_, _, d) = mesh.faces[0], mesh.faces[1]
    mesh = mesh.model_copy(update={"faces": ((b, c, d), (b, d, a), *mesh.faces[2:])})
    certificate = certify(mesh, threads=1)
    assert certificate.ok
    assert certificate.combinatorics_ok
    assert [defect["severity"] for defect in certificate.defects] == ["warning"]


@pytest.mark.slow
@pytest.mark.parametrize("m, genus", [(5, 5), (6, 17)])
@pytest.mark.parametrize("f0", [0, 1])
def test_realized_mirror_surfaces(m, genus, f0):
    """Test the realizations of Q_5 and Q_6 for two base facets."""
    certificate = certify(realize_surface(m, f0=f0))
    assert certificate.ok
    assert certificate.genus_from_mesh == genus


def test_selection_by_code_and_name():
    """Test resolving codes, names and the composite selection."""
    assert get_selected_checks(None) == [
        PlanarityCheck,
        ConvexityCheck,
        PairwiseCheck,
        CombinatoricsCheck,
    ]
    assert get_selected_checks(["PWI", "planarity", "pwi"]) == [PairwiseCheck, PlanarityCheck]
    assert len(get_selected_checks(["ALL"])) == 4
    with pytest.raises(DomainError):
        get_selected_checks(["XYZ"])


def test_unselected_checks_count_as_passed(cube_mesh):
    """Test that a certificate from a subset of checks reports the others as passed."""
    faces = list(cube_mesh.faces)
    faces[0] = (0, 1, 2, 3)
    mesh = cube_mesh.model_copy(update={"faces": tuple(faces)})
    checks = instantiate_checks(get_selected_checks(["PLN"]))
    certificate = certify(mesh, checks=checks)
    assert certificate.convex_ok


def test_all_checks_composite(cube_mesh):
    """Test that the composite runs every check."""
    assert [c.cli_code() for c in AllChecks(threads=1).checks] == ["PLN", "CVX", "PWI", "CMB"]
    assert list(AllChecks(threads=1).test(cube_mesh)) == []
