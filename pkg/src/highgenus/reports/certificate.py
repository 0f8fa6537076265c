"""Results of the mesh checks."""

from ..models import EmbeddingCertificate
from .base import BaseReport, ReportOptions
from .utils import format_result

ROWS = [
    ("Planarity", "PLN", "planar_ok"),
    ("Convexity", "CVX", "convex_ok"),
    ("Pairwise intersection", "PWI", "pairwise_ok"),
    ("Combinatorics", "CMB", "combinatorics_ok"),
]


class CertificateReport(BaseReport):
    """Pass/fail per check, the recomputed genus, and the failure witnesses.

    Checks outside selected_checks (a list of codes) are marked as not run.
    """

    @classmethod
    def cli_name(cls) -> str:
        return "certificate"

    @classmethod
    def cli_code(cls) -> str:
        return "CERT"

    def __init__(
        self,
        certificate: EmbeddingCertificate,
        selected_checks: list[str] | None = None,
        options: ReportOptions | None = None,
    ):
        super().__init__(options)
        c = certificate
        results = {}
        for label, code, field in ROWS:
            ran = selected_checks is None or code in selected_checks
            results[f"{label} ({code})"] = format_result(getattr(c, field) if ran else None)
        results["Genus from mesh"] = c.genus_from_mesh if c.genus_from_mesh is not None else "n/a"

        self.add_title("Embedding Certificate", 2)
        self.add_properties(results, heading="Check")
        self.add_text(f"**Overall:** {format_result(c.ok)}")
        self.add_blank_line()
        self.add_witnesses([*c.failures, *c.defects])
