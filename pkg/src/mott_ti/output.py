"""Machine-readable output: one envelope, two renderings (CSV and JSON).

Every envelope embeds the tool version, a fingerprint of the constants in
effect, and the full parameter echo, so any output file identifies the
invocation that produced it.  Rendering is deterministic: no timestamps,
fixed key order, Unix line endings, '.' decimal separator, and CSV cells
printed with 9 significant digits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import __version__
from .constants import PhysicalConstants


def format_number(x: float) -> str:
    """CSV numeric cell: 9 significant digits."""
    return f"{x:.9g}"


def _plain(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def _csv_cell(value: Any) -> str:
    text = _plain(value)
    if any(ch in text for ch in ',"\n'):
        text = '"' + text.replace('"', '""') + '"'
    return text


@dataclass
class OutputEnvelope:
    """Tabular payload (columns x rows) plus scalar results and parameters."""

    params: dict[str, Any]
    constants: PhysicalConstants
    columns: Sequence[str] = ()
    rows: Sequence[Sequence[Any]] = ()
    scalars: dict[str, Any] = field(default_factory=dict)

    def metadata(self) -> dict[str, Any]:
        return {
            "tool": "mott-ti",
            "version": __version__,
            "constants_fingerprint": self.constants.fingerprint(),
        }

    def to_json(self) -> str:
        data: dict[str, Any] = dict(self.scalars)
        if self.columns:
            data["columns"] = list(self.columns)
            data["rows"] = [list(row) for row in self.rows]
        doc = {"metadata": self.metadata(), "params": self.params, "data": data}
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        # comment lines carry whole values and are never field-split, so
        # they stay unquoted; only table cells get RFC 4180 quoting
        lines = []
        for key, value in self.metadata().items():
            lines.append(f"# {key}={_plain(value)}")
        for key, value in self.params.items():
            lines.append(f"# {key}={_plain(value)}")
        for key, value in self.scalars.items():
            lines.append(f"# {key}={_plain(value)}")
        if self.columns:
            lines.append(",".join(self.columns))
            for row in self.rows:
                lines.append(",".join(_csv_cell(v) for v in row))
        elif self.scalars:
            # scalar-only payloads still get a parseable table
            lines.append(",".join(self.scalars))
            lines.append(",".join(_csv_cell(v) for v in self.scalars.values()))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")
