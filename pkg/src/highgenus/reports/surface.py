"""Combinatorial summary of a surface."""

from ..models import SurfaceReport
from .base import BaseReport, ReportOptions
from .utils import format_result


class SurfaceSummaryReport(BaseReport):
    """f-vector, Euler characteristic, genus and the derived flags."""

    @classmethod
    def cli_name(cls) -> str:
        return "surface-summary"

    @classmethod
    def cli_code(cls) -> str:
        return "SS"

    def __init__(self, report: SurfaceReport, options: ReportOptions | None = None):
        super().__init__(options)
        fv = report.f_vector
        self.add_title("Surface", 2)
        self.add_properties(
            {
                "f-vector": f"({fv.f0}, {fv.f1}, {fv.f2})",
                "Euler characteristic": report.euler_characteristic,
                "Genus": report.genus if report.genus is not None else "non-orientable",
                "Orientable": format_result(report.orientable),
                "Simplicial": format_result(report.simplicial),
                "Neighborly": format_result(report.neighborly),
                "Intersection condition": format_result(report.intersection_condition),
                "Genus bound (n-3)(n-4)/12": format_result(report.genus_bound_ok),
            }
        )
