"""Exact certification of embedded meshes.

Each check yields violations for one property of the mesh; certify runs a
selection of them and collects the results into an EmbeddingCertificate.
"""

from ..errors import DomainError
from .base import Check, CompositeCheck, FaceCheck, Severity, Violation
from .certify import certify, default_checks
from .combinatorics import CombinatoricsCheck
from .pairwise import PairwiseCheck, check_pairwise, find_intersections, polygon_intersection
from .planarity import ConvexityCheck, PlanarityCheck, check_planarity_convexity


class AllChecks(CompositeCheck):
    """Every available check."""

    @classmethod
    def cli_name(cls) -> str:
        return "all"

    @classmethod
    def cli_code(cls) -> str:
        return "ALL"

    def __init__(self, threads: int | None = None):
        super().__init__(*default_checks(threads))


ALL_CHECK_CLASSES: list[type[Check]] = [
    PlanarityCheck,
    ConvexityCheck,
    PairwiseCheck,
    CombinatoricsCheck,
]

CHECK_MAPPING = {cls.cli_name(): cls for cls in ALL_CHECK_CLASSES}
SHORTHAND_MAPPING = {cls.cli_code(): cls.cli_name() for cls in ALL_CHECK_CLASSES}


def get_selected_checks(selected: list[str] | None = None) -> list[type[Check]]:
    """Check classes for a list of names or codes, all of them if None.

    Raises:
        DomainError: an entry is neither a check name nor a check code
    """
    if not selected:
        return list(ALL_CHECK_CLASSES)

    result: list[type[Check]] = []
    for item in selected:
        name = SHORTHAND_MAPPING.get(item.upper(), item)
        if name == AllChecks.cli_name() or item.upper() == AllChecks.cli_code():
            result.extend(ALL_CHECK_CLASSES)
        elif name in CHECK_MAPPING:
            result.append(CHECK_MAPPING[name])
        else:
            raise DomainError(
                f"unknown check {item!r}; choose from {', '.join(SHORTHAND_MAPPING)}",
                {"check": item},
            )
    # Preserve order, drop duplicates
    return list(dict.fromkeys(result))


def instantiate_checks(classes: list[type[Check]], threads: int | None = None) -> list[Check]:
    return [PairwiseCheck(threads) if cls is PairwiseCheck else cls() for cls in classes]


__all__ = [
    "ALL_CHECK_CLASSES",
    "AllChecks",
    "CHECK_MAPPING",
    "Check",
    "CombinatoricsCheck",
    "CompositeCheck",
    "ConvexityCheck",
    "FaceCheck",
    "PairwiseCheck",
    "PlanarityCheck",
    "SHORTHAND_MAPPING",
    "Severity",
    "Violation",
    "certify",
    "check_pairwise",
    "check_planarity_convexity",
    "default_checks",
    "find_intersections",
    "get_selected_checks",
    "instantiate_checks",
    "polygon_intersection",
]
