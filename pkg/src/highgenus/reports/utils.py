"""Utility functions for report generation."""

import json
from typing import Any


def format_result(ok: bool | None) -> str:
    """Pass/fail mark; None means not applicable."""
    if ok is None:
        return "⚪"
    return "✅" if ok else "❌"


def format_witness(witness: dict[str, Any]) -> str:
    return json.dumps(witness, sort_keys=True)
