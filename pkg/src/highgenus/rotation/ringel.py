"""Ringel's cyclic neighborly triangulations with n = 12s + 7 vertices.

The network for s >= 1 ships as `data/ringel_network.json`: a ladder whose
vertex ids, colors, rotations and currents are expressions in s. A rail of
2s+3 vertices carries the currents 2s+2 .. 4s+3, a second rail of 2s-1
vertices carries 4s+4 .. 6s+3 and the rungs carry 1 .. 2s+1. The arc with
current c has tail end 2(c-1) and head end 2c-1.
"""

import logging
from functools import cache
from importlib.resources import as_file, files
from pathlib import Path
from typing import Any

from sympy import Symbol, sympify

from ..errors import DomainError, InternalAssertion, ParseError
from ..io import read_current_graph, read_network_template
from ..models import (
    Color,
    CurrentArc,
    CurrentGraph,
    CurrentVertex,
    RotationScheme,
)
from .current_graph import scheme_from_log, trace_current_graph, validate_current_graph
from .scheme import check_delta_star, moebius_scheme

logger = logging.getLogger(__name__)

NETWORK_FILE = "ringel_network.json"


@cache
def _shipped_template() -> dict[str, Any]:
    with as_file(files(__package__) / "data" / NETWORK_FILE) as path:
        return read_network_template(path)


@cache
def _parse(expression: str):
    return sympify(expression)


def _evaluate(expression: str, values: dict[str, int]) -> int:
    value = _parse(expression).subs({Symbol(k): v for k, v in values.items()})
    if not value.is_Integer:
        raise ParseError(
            f"expression {expression!r} is not an integer for {values}",
            {"expression": expression},
        )
    return int(value)


def instantiate_network(template: dict[str, Any], value: int) -> CurrentGraph:
    """Evaluate a network template at one parameter value.

    Vertex families with a `for` clause are expanded over the inclusive
    range; the vertices are then ordered by id, which must run 0 .. V-1.

    Raises:
        DomainError: value below the template minimum
        ParseError: ids are not a permutation or an expression is not integral
    """
    name = template["parameter"]
    if value < template["minimum"]:
        raise DomainError(
            f"the network needs {name} >= {template['minimum']}, got {value}", {name: value}
        )
    env = {name: value}
    n_currents = _evaluate(template["currents"], env)

    def end(kind: str, current: int) -> int:
        return 2 * (current - 1) + (kind == "head")

    placed: dict[int, CurrentVertex] = {}
    for family in template["vertices"]:
        if "for" in family:
            var, low, high = family["for"]
            bindings = [
                {**env, var: k}
                for k in range(_evaluate(low, env), _evaluate(high, env) + 1)
            ]
        else:
            bindings = [env]
        for b in bindings:
            vertex_id = _evaluate(family["id"], b)
            if vertex_id in placed:
                raise ParseError(f"vertex {vertex_id} is defined twice", {"vertex": vertex_id})
            placed[vertex_id] = CurrentVertex(
                color=Color(family["color"]),
                rotation=tuple(end(kind, _evaluate(c, b)) for kind, c in family["rotation"]),
            )

    if sorted(placed) != list(range(len(placed))):
        raise ParseError("vertex ids are not 0 .. V-1", {"ids": sorted(placed)})
    return CurrentGraph(
        modulus=_evaluate(template["modulus"], env),
        vertices=tuple(placed[v] for v in range(len(placed))),
        arcs=tuple(
            CurrentArc(tail=end("tail", c), head=end("head", c), current=c)
            for c in range(1, n_currents + 1)
        ),
    )


def ringel_current_graph(s: int) -> CurrentGraph:
    """The shipped current graph generating the neighborly surface on 12s+7 vertices, s >= 1."""
    if s < 1:
        raise DomainError(
            "the ladder network exists for s >= 1; use moebius_scheme for s = 0", {"s": s}
        )
    return instantiate_network(_shipped_template(), s)


def theta_current_graph() -> CurrentGraph:
    """Two black vertices joined by three arcs with currents 1, 2, 3 mod 7."""
    return CurrentGraph(
        modulus=7,
        vertices=(
            CurrentVertex(color=Color.BLACK, rotation=(0, 2, 5)),
            CurrentVertex(color=Color.BLACK, rotation=(1, 3, 4)),
        ),
        arcs=(
            CurrentArc(tail=0, head=1, current=1),
            CurrentArc(tail=2, head=3, current=2),
            CurrentArc(tail=4, head=5, current=3),
        ),
    )


def ringel_scheme(s: int) -> RotationScheme:
    """Cyclic rotation scheme of the neighborly triangulation on 12s+7 vertices.

    s = 0 gives the seven-vertex torus directly.
    """
    if s < 0:
        raise DomainError(f"s must be nonnegative, got {s}", {"s": s})
    if s == 0:
        return moebius_scheme()

    scheme = scheme_from_current_graph(ringel_current_graph(s))
    logger.info(f"Built Ringel scheme for s={s} (n={scheme.n})")
    return scheme


def scheme_from_current_graph(graph: CurrentGraph) -> RotationScheme:
    """Validate a network, trace its single face and read the log as a cyclic scheme.

    Raises:
        DomainError: the network breaks Kirchhoff's law, is not cubic, reuses
            a label or traces more than one face
        InternalAssertion: the resulting scheme violates rule Delta*
    """
    validate_current_graph(graph)
    log = trace_current_graph(graph)

    half = len(graph.arcs)
    if sorted(log.labels) != sorted([*range(-half, 0), *range(1, half + 1)]):
        raise InternalAssertion(
            "traversal log does not list every current once in each direction"
        )
    scheme = scheme_from_log(log, graph.modulus)
    verdict = check_delta_star(scheme)
    if not verdict:
        raise InternalAssertion("scheme violates rule Delta*", verdict.witness)
    return scheme


def network_scheme(path: Path | str) -> tuple[CurrentGraph, RotationScheme]:
    """Read a current graph file and derive its rotation scheme."""
    graph = read_current_graph(path)
    return graph, scheme_from_current_graph(graph)
