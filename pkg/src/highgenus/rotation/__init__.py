"""Rotation schemes, current graphs and Ringel's neighborly triangulations."""

from .current_graph import scheme_from_log, trace_current_graph, validate_current_graph
from .ringel import (
    instantiate_network,
    network_scheme,
    ringel_current_graph,
    ringel_scheme,
    scheme_from_current_graph,
    theta_current_graph,
)
from .scheme import (
    canonical_rows,
    check_delta_star,
    cyclic_scheme,
    moebius_scheme,
    scheme_to_surface,
    validate_scheme,
)

__all__ = [
    "canonical_rows",
    "check_delta_star",
    "cyclic_scheme",
    "instantiate_network",
    "moebius_scheme",
    "network_scheme",
    "ringel_current_graph",
    "ringel_scheme",
    "scheme_from_current_graph",
    "scheme_from_log",
    "scheme_to_surface",
    "theta_current_graph",
    "trace_current_graph",
    "validate_current_graph",
    "validate_scheme",
]
