from .base import CompositeStatistic, Statistic, StatisticValue, values_of
from .surface import (
    AllSurfaceStatistics,
    EdgeCountStatistic,
    FaceCountStatistic,
    FaceSizeStatistic,
    VertexCountStatistic,
    VertexDegreeStatistic,
    histogram,
)


class AllStatistics(CompositeStatistic):
    def __init__(self) -> None:
        super().__init__(AllSurfaceStatistics())


__all__ = [
    "AllStatistics",
    "AllSurfaceStatistics",
    "CompositeStatistic",
    "EdgeCountStatistic",
    "FaceCountStatistic",
    "FaceSizeStatistic",
    "Statistic",
    "StatisticValue",
    "VertexCountStatistic",
    "VertexDegreeStatistic",
    "histogram",
    "values_of",
]
