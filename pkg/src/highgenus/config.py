"""Run configuration shared by the command implementations."""

import os
from pathlib import Path
from typing import Literal

from pydantic import Field

from .errors import DomainError
from .geometry.deformed_cube import DEFAULT_EPSILON
from .models import HighGenusModel, Rational

THREADS_ENV = "HIGHGENUS_THREADS"

ExportFormat = Literal["json", "off", "obj"]


def threads_from_env() -> int:
    """Worker process count from HIGHGENUS_THREADS, 1 when unset.

    Raises:
        DomainError: the variable is not a positive integer
    """
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


class RunConfig(HighGenusModel):
    """Parameters of one CLI invocation."""

    command: str
    s: int | None = None
    q: int | None = None
    m: int | None = None
    epsilon: Rational = DEFAULT_EPSILON
    f0: int = 0
    generator: int | None = None
    """Canonical index of a multiplicative generator for heffter; the smallest if unset."""
    input: Path | None = None
    network: Path | None = None
    """Current graph file for ringel, used instead of the shipped network."""
    out: Path | None = None
    """Main output file; its suffix picks the format unless format is given."""
    out_dir: Path = Path(".")
    format: ExportFormat | None = None
    decimals: int = Field(default=12, ge=1, le=40)
    triangulate: bool = False
    current_graph: bool = False
    force: bool = False
    no_collapse: bool = False
    checks: tuple[str, ...] | None = None
    threads: int = Field(default_factory=threads_from_env, ge=1)

    def output_format(self) -> ExportFormat:
        if self.format is not None:
            return self.format
        if self.out is not None and self.out.suffix.lower() in (".off", ".obj"):
            return self.out.suffix.lower()[1:]  # type: ignore[return-value]
        return "json"
