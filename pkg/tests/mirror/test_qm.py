"""Tests for the mirror surface Q_m."""

from collections import Counter

import pytest

from highgenus.errors import DomainError
from highgenus.mirror import (
    build_qm,
    code_parity,
    face_provenance,
    is_qm_quad,
    orient_qm,
    qm_genus,
    qm_vertex_link,
    quad_cycle,
    triangulate_equivelar,
)
from highgenus.surface import analyze, find_isomorphism, validate_surface, vertex_degrees

CUBE = [
    (0, 1, 3, 2),
    (4, 6, 7, 5),
    (0, 4, 5, 1),
    (2, 3, 7, 6),
    (0, 2, 6, 4),
    (1, 5, 7, 3),
]


def test_q3_is_the_cube():
    """Test that Q_3 is the boundary of the 3-cube."""
    _, surface = build_qm(3)
    report = analyze(surface)
    assert report.genus == 0
    assert find_isomorphism(surface, validate_surface(CUBE)) is not None


@pytest.mark.parametrize(
    "m, f_vector, genus",
    [(4, (16, 32, 16), 1), (5, (32, 80, 40), 5), (6, (64, 192, 96), 17)],
)
def test_f_vector_and_genus(m, f_vector, genus):
    """Test f = (2^m, m 2^(m-1), m 2^(m-2)), chi = (4-m) 2^(m-2) and g = 1 + (m-4) 2^(m-3)."""
    qm, surface = build_qm(m)
    report = analyze(surface)
    fv = report.f_vector
    assert (fv.f0, fv.f1, fv.f2) == f_vector
    assert (len(qm.vertices), len(qm.edges), len(qm.quads)) == f_vector
    assert report.euler_characteristic == (4 - m) * 2 ** (m - 2)
    assert report.genus == qm_genus(m) == genus


@pytest.mark.parametrize("m", [0, 1, 2])
def test_small_m_is_rejected(m):
    """Test that Q_m needs m >= 3."""
    with pytest.raises(DomainError):
        build_qm(m)


def test_quad_membership():
    """Test that only cyclically adjacent stars make a quad."""
    assert is_qm_quad("01**0")
    assert is_qm_quad("*010*")
    assert not is_qm_quad("0*1*0")
    assert not is_qm_quad("0*100")
    assert not is_qm_quad("**1*0")


def test_every_quad_code_is_a_member():
    """Test that build_qm only emits quad codes accepted by the membership test."""
    qm, _ = build_qm(5)
    assert all(is_qm_quad(code) for code in qm.quads)
    assert len(set(qm.quads)) == len(qm.quads)


def test_quad_traversal():
    """Test the 00, 10, 11, 01 walk of the free positions."""
    assert quad_cycle("0**") == (0, 2, 3, 1)
    assert quad_cycle("*0*") == (0, 1, 5, 4)
    assert code_parity("0110*") == 0
    assert code_parity("1*0") == 1


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_parity_orientation_is_coherent(m):
    """Test that the parity rule orients Q_m coherently."""
    qm, _ = build_qm(m)
    oriented = orient_qm(qm)
    assert len(oriented.faces) == m * 2 ** (m - 2)
    darts = Counter(
        (face[i], face[(i + 1) % 4]) for face in oriented.faces for i in range(4)
    )
    assert max(darts.values()) == 1
    assert analyze(validate_surface(oriented.faces)).orientable


@pytest.mark.parametrize("m", [4, 5])
def test_vertex_links_are_m_cycles(m):
    """Test that the m quads around a vertex close up through shared edges."""
    qm, _ = build_qm(m)
    quads = set(qm.quads)
    for v in range(2**m):
        link = qm_vertex_link(qm, v)
        assert len(link) == m
        assert set(link) <= quads
        for i, code in enumerate(link):
            nxt = link[(i + 1) % m]
            common = set(quad_cycle(code)) & set(quad_cycle(nxt))
            assert v in common and len(common) == 2


@pytest.mark.parametrize(
    "m, f_vector, degrees",
    [(4, (16, 48, 32), {6}), (6, (64, 288, 192), {9})],
)
def test_equivelar_triangulation(m, f_vector, degrees):
    """Test the f-vector and the constant degree 3m/2 for even m."""
    qm, _ = build_qm(m)
    triangulated = triangulate_equivelar(qm)
    report = analyze(triangulated)
    fv = report.f_vector
    assert (fv.f0, fv.f1, fv.f2) == f_vector
    assert set(vertex_degrees(triangulated)) == degrees
    assert report.genus == qm_genus(m)
    assert len(face_provenance(qm, triangulated=True)) == fv.f2


def test_odd_m_triangulation_is_not_equivelar():
    """Test that degrees differ for m = 5."""
    qm, _ = build_qm(5)
    triangulated = triangulate_equivelar(qm)
    fv = analyze(triangulated).f_vector
    assert (fv.f0, fv.f1, fv.f2) == (32, 120, 80)
    assert len(set(vertex_degrees(triangulated))) > 1


def test_m3_still_triangulates():
    """Test that the cube splits into 12 triangles."""
    qm, _ = build_qm(3)
    report = analyze(triangulate_equivelar(qm))
    assert report.f_vector.f2 == 12
    assert report.genus == 0
