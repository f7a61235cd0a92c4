from __future__ import annotations
import csv
import io

from .base import ResultTable, Writer


def format_cell(value) -> str:
    """12 significant digits for floats, an empty cell for a missing value."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


class CsvWriter(Writer):
    """Header row followed by one comma-separated line per row."""

    def render_to_string(self, table: ResultTable) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(table.columns)
        for row in table.rows:
            out.writerow([format_cell(v) for v in row])
        return buf.getvalue()
