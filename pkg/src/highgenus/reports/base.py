"""Markdown report builder shared by all report sections."""

from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Mapping
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any

from .utils import format_witness


@dataclass
class ReportOptions:
    """Options for configuring report generation."""

    use_collapsible: bool = True
    max_witnesses: int = 20
    """Failure witnesses listed in full; the rest are only counted."""


class BaseReport(ABC):
    """A report section: a list of markdown lines built in the constructor."""

    @classmethod
    @abstractmethod
    def cli_name(cls) -> str:
        """A CLI friendly (e.g. kebab case) name for this report."""
        ...

    @classmethod
    @abstractmethod
    def cli_code(cls) -> str:
        """A short all-caps code for this report."""
        ...

    def __init__(self, options: ReportOptions | None = None):
        self._lines: list[str] = []
        self._options = options or ReportOptions()

    def add_title(self, title: str, level: int = 1) -> "BaseReport":
        self._lines += [f"{'#' * level} {title}", ""]
        return self

    def add_text(self, text: str) -> "BaseReport":
        self._lines.append(text)
        return self

    def add_blank_line(self) -> "BaseReport":
        self._lines.append("")
        return self

    def add_table(self, columns: list[str], rows: Iterable[Iterable[Any]]) -> "BaseReport":
        """A markdown table followed by a blank line; cells go through str()."""
        self._lines.append("| " + " | ".join(columns) + " |")
        self._lines.append("|" + "---|" * len(columns))
        for row in rows:
            self._lines.append("| " + " | ".join(str(cell) for cell in row) + " |")
        self._lines.append("")
        return self

    def add_properties(
        self, properties: Mapping[str, Any], heading: str = "Property"
    ) -> "BaseReport":
        return self.add_table([heading, "Value"], properties.items())

    def add_histogram(self, label: str, counts: Mapping[int, int], unit: str) -> "BaseReport":
        with self.collapsible(f"{label} histogram"):
            self.add_table([label, unit], sorted(counts.items()))
        return self

    def add_witnesses(self, witnesses: list[dict[str, Any]]) -> "BaseReport":
        """List witnesses as JSON, at most max_witnesses of them."""
        if not witnesses:
            return self
        shown = witnesses[: self._options.max_witnesses]
        with self.collapsible(f"Witnesses ({len(witnesses)})"):
            self._lines += [f"- `{format_witness(w)}`" for w in shown]
            if len(witnesses) > len(shown):
                self._lines.append(f"- ... and {len(witnesses) - len(shown)} more")
            self._lines.append("")
        return self

    def add_report(self, report: "BaseReport") -> "BaseReport":
        """Append a section built with the same options."""
        self._lines.extend(report._lines)
        return self

    @contextmanager
    def collapsible(self, summary: str) -> Iterator["BaseReport"]:
        """Wrap whatever is added inside the block in <details>, if enabled."""
        if self._options.use_collapsible:
            self._lines += ["<details>", f"<summary>{summary}</summary>", ""]
        yield self
        if self._options.use_collapsible:
            self._lines += ["</details>", ""]

    def build(self) -> str:
        return "\n".join(self._lines)
