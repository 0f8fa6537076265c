"""Current graphs: validation and the face-tracing walk.

Arc ends carry global ids. The walk arrives at a vertex through one arc end
and leaves through the next end of the rotation at a black vertex, the
previous one at a white vertex. Leaving through a tail end walks the arc
along its direction and records +current; leaving through a head end
records -current.
"""

import logging
from collections import Counter
from dataclasses import dataclass

from ..errors import (
    DomainError,
    FlowViolation,
    LabelReuse,
    NotCubic,
    NotSingleCycle,
)
from ..models import Color, CurrentGraph, RotationScheme, TraversalLog, Verdict
from .scheme import cyclic_scheme

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _End:
    arc: int
    is_tail: bool
    vertex: int


def _index_ends(g: CurrentGraph) -> dict[int, _End]:
    at_vertex: dict[int, int] = {}
    for v, vertex in enumerate(g.vertices):
        for end in vertex.rotation:
            if end in at_vertex:
                raise DomainError(
                    f"arc end {end} appears at vertices {at_vertex[end]} and {v}",
                    {"end": end},
                )
            at_vertex[end] = v

    ends: dict[int, _End] = {}
    for a, arc in enumerate(g.arcs):
        for end, is_tail in ((arc.tail, True), (arc.head, False)):
            if end not in at_vertex or end in ends:
                raise DomainError(
                    f"arc {a} has a missing or shared end {end}", {"arc": a}
                )
            ends[end] = _End(arc=a, is_tail=is_tail, vertex=at_vertex[end])
    if len(ends) != len(at_vertex):
        stray = min(set(at_vertex) - set(ends))
        raise DomainError(f"arc end {stray} belongs to no arc", {"end": stray})
    return ends


def validate_current_graph(g: CurrentGraph) -> Verdict:
    """Check cubic degrees, label coverage and Kirchhoff's law mod n.

    Raises:
        NotCubic: a vertex does not have three arc ends
        LabelReuse: a label of 1..(n-1)/2 is used twice or not at all
        FlowViolation: the signed currents at a vertex do not sum to 0 mod n
    """
    ends = _index_ends(g)
    for v, vertex in enumerate(g.vertices):
        if len(vertex.rotation) != 3:
            raise NotCubic(
                f"vertex {v} has degree {len(vertex.rotation)}", {"vertex": v}
            )

    n = g.modulus
    labels = Counter(arc.current for arc in g.arcs)
    for label in sorted(labels):
        if labels[label] > 1 or not 1 <= label <= (n - 1) // 2:
            raise LabelReuse(f"label {label} is used {labels[label]} times", {"label": label})
    for label in range(1, (n - 1) // 2 + 1):
        if label not in labels:
            raise LabelReuse(f"label {label} is never used", {"label": label})

    for v, vertex in enumerate(g.vertices):
        flow = 0
        for end in vertex.rotation:
            info = ends[end]
            current = g.arcs[info.arc].current
            flow += -current if info.is_tail else current
        if flow % n:
            raise FlowViolation(
                f"Kirchhoff's law fails at vertex {v}: net inflow {flow} mod {n}",
                {"vertex": v, "inflow": flow % n},
            )
    return Verdict(ok=True)


def trace_current_graph(g: CurrentGraph) -> TraversalLog:
    """Walk the current graph starting along the arc labelled 1.

    Returns:
        TraversalLog of signed currents in walking order, closed when the walk
        came back to its first arc end

    Raises:
        NotSingleCycle: the walk returns to its start before using every
            arc once in each direction
    """
    ends = _index_ends(g)
    turn: dict[int, int] = {}
    for vertex in g.vertices:
        rotation = vertex.rotation
        step = 1 if vertex.color == Color.BLACK else -1
        for k, end in enumerate(rotation):
            turn[end] = rotation[(k + step) % len(rotation)]

    start_arc = next(
        (a for a, arc in enumerate(g.arcs) if arc.current == 1), None
    )
    if start_arc is None:
        raise LabelReuse("no arc carries current 1", {"label": 1})

    start = g.arcs[start_arc].tail
    leave = start
    labels: list[int] = []
    while True:
        info = ends[leave]
        arc = g.arcs[info.arc]
        if info.is_tail:
            labels.append(arc.current)
            arrive = arc.head
        else:
            labels.append(-arc.current)
            arrive = arc.tail
        leave = turn[arrive]
        if leave == start:
            break

    closed = len(labels) == 2 * len(g.arcs)
    if not closed:
        raise NotSingleCycle(
            f"walk closed after {len(labels)} of {2 * len(g.arcs)} steps",
            {"steps": len(labels)},
        )
    logger.debug(f"Traversal log ({len(labels)} steps): {labels}")
    return TraversalLog(labels=tuple(labels), closed=closed)


def scheme_from_log(log: TraversalLog, n: int) -> RotationScheme:
    """Read the log as row 0 of a cyclic scheme mod n."""
    return cyclic_scheme(n, [x % n for x in log.labels])
