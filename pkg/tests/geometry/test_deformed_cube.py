"""Tests for the deformed cube and its preservation certificates."""

from fractions import Fraction

import pytest

from highgenus.errors import DomainError, EpsilonOutOfRange, NotPreserved
from highgenus.geometry.deformed_cube import (
    build_deformed_cube,
    check_closed_form_dependency,
    check_induction_bound,
    closed_form_dependency,
    cube_vertex,
    cube_vertices,
    dependency_oracle,
    face_tight_rows,
    kernel_check_Am,
    limit_matrix,
    preservation_certificate,
    project_to_R4,
    tight_rows,
    verify_cube_combinatorics,
)
from highgenus.mirror import build_qm


def test_right_hand_sides():
    """Test b_k = (6/eps)^(k-1) for two parameter choices."""
    cube = build_deformed_cube(5, Fraction(1, 3))
    assert cube.rhs == (1, 18, 324, 5832, 104976)
    cube = build_deformed_cube(4, Fraction(1, 4))
    assert cube.rhs == (1, 24, 576, 13824)


def test_row_layout():
    """Test the +eps/-eps pairs and the -2, 7, -7, 2 tail."""
    cube = build_deformed_cube(6, "1/4")
    assert len(cube.rows) == 12
    assert cube.rows[0] == (Fraction(1, 4), 0, 0, 0, 0, 0)
    assert cube.rows[1] == (Fraction(-1, 4), 0, 0, 0, 0, 0)
    assert cube.rows[10] == (0, -2, 7, -7, 2, Fraction(1, 4))
    assert cube.rows[11] == (0, -2, 7, -7, 2, Fraction(-1, 4))


def test_parameter_validation():
    """Test that small m and out-of-range epsilon are rejected."""
    with pytest.raises(DomainError):
        build_deformed_cube(3, "1/4")
    for epsilon in ["1/2", "0", "-1/4", "3"]:
        with pytest.raises(EpsilonOutOfRange):
            build_deformed_cube(5, epsilon)
    with pytest.raises(EpsilonOutOfRange):
        build_deformed_cube(5, "0", check_range=False)


def test_forward_substitution():
    """Test the first coordinates of two sign vectors."""
    cube = build_deformed_cube(4, Fraction(1, 3))
    top = cube_vertex(cube, (1, 1, 1, 1))
    assert top.coords[:2] == (3, 36)
    assert cube_vertex(cube, (-1, 1, 1, 1)).coords[0] == -3


def test_vertices_are_distinct_and_simple():
    """Test 2^m distinct vertices, each tight on exactly m rows."""
    cube = build_deformed_cube(4, Fraction(1, 4))
    vertices = cube_vertices(cube)
    assert len({v.coords for v in vertices}) == 16
    for v in vertices:
        assert len(tight_rows(cube, v.coords)) == 4


@pytest.mark.parametrize("m, epsilon", [(4, "1/4"), (5, "1/4"), (6, "1/3"), (7, "1/3")])
def test_combinatorial_cube(m, epsilon):
    """Test that in-range parameters give a combinatorial m-cube."""
    cube = build_deformed_cube(m, epsilon)
    assert verify_cube_combinatorics(cube)
    assert check_induction_bound(cube)


def test_large_epsilon_breaks_the_cube():
    """Test that eps = 10 fails with a witness while eps = 2 still works."""
    verdict = verify_cube_combinatorics(build_deformed_cube(4, 10, check_range=False))
    assert not verdict
    assert "signs" in verdict.witness
    assert verify_cube_combinatorics(build_deformed_cube(4, 2, check_range=False))


@pytest.mark.parametrize("m", range(5, 17))
def test_kernel_vectors(m):
    """Test the four row dependencies of the limit matrix."""
    assert kernel_check_Am(m)


def test_kernel_check_needs_m_at_least_5():
    """Test that the limit matrix is undefined for m = 4."""
    with pytest.raises(DomainError):
        kernel_check_Am(4)


def test_limit_matrix_shape():
    """Test the band structure of the limit matrix."""
    matrix = limit_matrix(6)
    assert len(matrix) == 6
    assert matrix[0] == [0, 0]
    assert matrix[1] == [2, 0]
    assert matrix[4] == [-2, 7]
    assert matrix[5] == [0, -2]


@pytest.mark.parametrize("t", range(1, 8))
def test_closed_form_dependency(t):
    """Test the closed form vanishes exactly at rows t and t + 1."""
    y = closed_form_dependency(8, t)
    assert y[t - 1] == 0 and y[t] == 0
    assert check_closed_form_dependency(8, t)


@pytest.mark.parametrize("m", [5, 8])
def test_dependency_oracle(m):
    """Test positive dependencies with rows t, t + 1 removed, with and without row 1."""
    for t in range(1, m + 1):
        assert dependency_oracle(m, t)
    for t in range(2, m):
        assert dependency_oracle(m, t, drop_first=True)


def test_face_tight_rows():
    """Test that 1 picks the +eps row and 0 the -eps row."""
    assert face_tight_rows("1*0*") == (0, 5)


def test_certificate_for_a_quad():
    """Test a certificate with free positions 2 and 3 for m = 7."""
    cube = build_deformed_cube(7, "1/4")
    cert = preservation_certificate(cube, "01**010")
    assert cert.tight_rows == (1, 2, 9, 10, 13)
    assert min(cert.lambdas) >= 1
    for j in range(3):
        total = sum(lam * cube.rows[r][j] for lam, r in zip(cert.lambdas, cert.tight_rows))
        assert total == 0
    assert len(cert.rank_witness) == 3


def test_every_face_of_q5_is_certified():
    """Test certificates for all vertices, edges and quads of Q_5."""
    cube = build_deformed_cube(5, "1/4")
    qm, _ = build_qm(5)
    for code in [*qm.vertices, *qm.edges, *qm.quads]:
        preservation_certificate(cube, code)


def test_certificates_are_vacuous_for_m_4():
    """Test that nothing is projected away for m = 4."""
    cube = build_deformed_cube(4, "1/4")
    cert = preservation_certificate(cube, "1*0*")
    assert cert.lambdas == (1, 1)
    assert cert.rank_witness == ()


def test_facet_is_not_preserved():
    """Test that a facet of the cube loses its dimension under projection."""
    cube = build_deformed_cube(7, "1/4")
    with pytest.raises(NotPreserved):
        preservation_certificate(cube, "1******")


def test_bad_face_codes():
    """Test rejection of malformed codes and of the whole cube."""
    cube = build_deformed_cube(5, "1/4")
    with pytest.raises(DomainError):
        preservation_certificate(cube, "01*")
    with pytest.raises(DomainError):
        preservation_certificate(cube, "*****")


def test_projection():
    """Test that the projection keeps the last four coordinates and stays injective."""
    cube = build_deformed_cube(6, "1/4")
    vertices = cube_vertices(cube)
    assert project_to_R4(vertices[5]) == vertices[5].coords[2:]
    assert len({project_to_R4(v) for v in vertices}) == 64
