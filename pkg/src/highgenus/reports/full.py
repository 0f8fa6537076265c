from ..models import CellSurface, EmbeddingCertificate, SurfaceReport
from .base import BaseReport, ReportOptions
from .certificate import CertificateReport
from .statistics import DegreeStatisticsReport
from .surface import SurfaceSummaryReport


class FullReport(BaseReport):
    """Metadata, surface summary, statistics and, for meshes, the certificate."""

    @classmethod
    def cli_name(cls) -> str:
        return "full"

    @classmethod
    def cli_code(cls) -> str:
        return "F"

    def __init__(
        self,
        title: str,
        surface: CellSurface,
        report: SurfaceReport | None,
        certificate: EmbeddingCertificate | None = None,
        metadata: dict[str, str] | None = None,
        options: ReportOptions | None = None,
        selected_checks: list[str] | None = None,
    ):
        super().__init__(options)
        self.add_title(title, 1)
        if metadata:
            self.add_properties(dict(sorted(metadata.items())), heading="Parameter")
        if report is not None:
            self.add_report(SurfaceSummaryReport(report, self._options))
        self.add_report(DegreeStatisticsReport(surface, self._options))
        if certificate is not None:
            self.add_report(CertificateReport(certificate, selected_checks, self._options))
