"""Degree and face size statistics."""

from ..models import CellSurface
from ..statistics import FaceSizeStatistic, VertexDegreeStatistic, histogram, values_of
from .base import BaseReport, ReportOptions


class DegreeStatisticsReport(BaseReport):
    """Min, max and average of vertex degrees and face sizes, with histograms."""

    @classmethod
    def cli_name(cls) -> str:
        return "degree-stats"

    @classmethod
    def cli_code(cls) -> str:
        return "DS"

    def __init__(self, surface: CellSurface, options: ReportOptions | None = None):
        super().__init__(options)
        rows = []
        for label, statistic in [
            ("Vertex degree", VertexDegreeStatistic()),
            ("Face size", FaceSizeStatistic()),
        ]:
            values = values_of(statistic, surface)
            if values:
                rows.append([label, f"{sum(values) / len(values):.2f}", min(values), max(values)])

        self.add_title("Degree Statistics", 2)
        self.add_table(["Metric", "Average", "Min", "Max"], rows)
        self.add_histogram("Degree", histogram(VertexDegreeStatistic(), surface), "Vertices")
        self.add_histogram("Face size", histogram(FaceSizeStatistic(), surface), "Faces")
