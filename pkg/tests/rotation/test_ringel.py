"""Tests for Ringel's neighborly triangulations."""

import pytest

from highgenus.errors import DomainError, ParseError
from highgenus.rotation import (
    check_delta_star,
    instantiate_network,
    moebius_scheme,
    ringel_current_graph,
    ringel_scheme,
    scheme_from_current_graph,
    scheme_to_surface,
    theta_current_graph,
    validate_current_graph,
)
from highgenus.surface import analyze, find_isomorphism


def test_s_zero_is_the_moebius_torus():
    """Test the golden seven-vertex case."""
    scheme = ringel_scheme(0)
    assert scheme == moebius_scheme()
    surface = scheme_to_surface(scheme)
    report = analyze(surface)
    assert (report.f_vector.f0, report.f_vector.f1, report.f_vector.f2) == (7, 21, 14)
    assert report.genus == 1
    assert report.neighborly
    assert check_delta_star(scheme)
    assert find_isomorphism(surface, scheme_to_surface(moebius_scheme())) is not None


@pytest.mark.parametrize("s, genus", [(1, 20), (2, 63)])
def test_ringel_genus(s, genus):
    """Test neighborliness and the maximal genus (n-3)(n-4)/12."""
    scheme = ringel_scheme(s)
    n = 12 * s + 7
    assert scheme.n == n
    assert check_delta_star(scheme)
    report = analyze(scheme_to_surface(scheme))
    assert report.simplicial
    assert report.neighborly
    assert report.orientable
    assert report.genus == genus == (n - 3) * (n - 4) // 12


def test_rows_are_translates():
    """Test that row v+1 is row v shifted by one."""
    scheme = ringel_scheme(2)
    n = scheme.n
    for v in range(n):
        assert scheme.rows[(v + 1) % n] == tuple((x + 1) % n for x in scheme.rows[v])


def test_negative_s_is_rejected():
    """Test that s must be nonnegative."""
    with pytest.raises(DomainError):
        ringel_scheme(-1)


@pytest.mark.slow
@pytest.mark.parametrize("s", range(3, 9))
def test_ringel_scaling(s):
    """Test the maximal genus up to n = 103."""
    n = 12 * s + 7
    report = analyze(scheme_to_surface(ringel_scheme(s)))
    assert report.neighborly
    assert report.genus == (n - 3) * (n - 4) // 12


THETA_TEMPLATE = {
    "parameter": "s",
    "minimum": 0,
    "modulus": "7",
    "currents": "3",
    "vertices": [
        {"id": "0", "color": "black", "rotation": [["tail", "1"], ["tail", "2"], ["head", "3"]]},
        {"id": "1", "color": "black", "rotation": [["head", "1"], ["head", "2"], ["tail", "3"]]},
    ],
}


def test_template_instantiation():
    """Test that a constant template gives the theta network end for end."""
    assert instantiate_network(THETA_TEMPLATE, 0) == theta_current_graph()


def test_template_rejects_duplicate_ids():
    """Test that two vertices with one id are a parse error."""
    template = {
        **THETA_TEMPLATE,
        "vertices": [THETA_TEMPLATE["vertices"][0], THETA_TEMPLATE["vertices"][0]],
    }
    with pytest.raises(ParseError):
        instantiate_network(template, 0)


def test_template_minimum():
    """Test that the parameter is checked against the template minimum."""
    with pytest.raises(DomainError):
        instantiate_network({**THETA_TEMPLATE, "minimum": 1}, 0)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_shipped_network_sizes(s):
    """Test 4s+2 cubic vertices, 6s+3 arcs and modulus 12s+7."""
    graph = ringel_current_graph(s)
    assert graph.modulus == 12 * s + 7
    assert len(graph.vertices) == 4 * s + 2
    assert [arc.current for arc in graph.arcs] == list(range(1, 6 * s + 4))
    assert all(len(v.rotation) == 3 for v in graph.vertices)
    ends = sorted(end for v in graph.vertices for end in v.rotation)
    assert ends == list(range(2 * (6 * s + 3)))
    assert validate_current_graph(graph)


def test_shipped_network_first_vertex():
    """Test the black vertex that feeds the second rail for s = 1."""
    graph = ringel_current_graph(1)
    # tail of current 8, head of current 5, head of current 3
    assert graph.vertices[0].rotation == (14, 9, 5)
    assert graph.vertices[0].color == "black"


def test_theta_network_scheme():
    """Test that the theta network gives a Delta* scheme on seven vertices."""
    scheme = scheme_from_current_graph(theta_current_graph())
    assert scheme.n == 7
    assert check_delta_star(scheme)
    surface = scheme_to_surface(scheme)
    assert find_isomorphism(surface, scheme_to_surface(moebius_scheme())) is not None
