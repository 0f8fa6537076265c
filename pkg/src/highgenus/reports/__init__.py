"""Markdown reports for surfaces and embedding certificates."""

from .base import BaseReport, ReportOptions
from .certificate import CertificateReport
from .full import FullReport
from .statistics import DegreeStatisticsReport
from .surface import SurfaceSummaryReport

__all__ = [
    "BaseReport",
    "CertificateReport",
    "DegreeStatisticsReport",
    "FullReport",
    "ReportOptions",
    "SurfaceSummaryReport",
]
