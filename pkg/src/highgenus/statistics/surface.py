"""Per-vertex and per-face statistics of a cell surface."""

from collections import Counter
from collections.abc import Generator

from ..models import CellSurface
from ..surface import edges, vertex_degrees
from .base import CompositeStatistic, Statistic, StatisticValue


class VertexDegreeStatistic(Statistic):
    """One value per vertex: the number of edges at it."""

    def compute(self, surface: CellSurface) -> Generator[StatisticValue, None, None]:
        for degree in vertex_degrees(surface):
            yield StatisticValue(self, degree)


class FaceSizeStatistic(Statistic):
    """One value per face: the length of its boundary walk."""

    def compute(self, surface: CellSurface) -> Generator[StatisticValue, None, None]:
        for face in surface.faces:
            yield StatisticValue(self, len(face))


class EdgeCountStatistic(Statistic):
    def compute(self, surface: CellSurface) -> Generator[StatisticValue, None, None]:
        yield StatisticValue(self, len(edges(surface)))


class FaceCountStatistic(Statistic):
    def compute(self, surface: CellSurface) -> Generator[StatisticValue, None, None]:
        yield StatisticValue(self, len(surface.faces))


class VertexCountStatistic(Statistic):
    def compute(self, surface: CellSurface) -> Generator[StatisticValue, None, None]:
        yield StatisticValue(self, surface.n_vertices)


def histogram(statistic: Statistic, surface: CellSurface) -> dict[int, int]:
    """Value -> multiplicity, sorted by value.

    Args:
        statistic: A statistic with integer values, e.g. vertex degrees
        surface: The surface to compute it on
    """
    counts = Counter(v.value for v in statistic.compute(surface))
    return dict(sorted(counts.items()))


class AllSurfaceStatistics(CompositeStatistic):
    def __init__(self) -> None:
        super().__init__(
            VertexCountStatistic(),
            EdgeCountStatistic(),
            FaceCountStatistic(),
        )
