from __future__ import annotations
import json
import math

from .base import ResultTable, Writer


def _jsonable(value):
    if value is None:
        return None
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "item"):
        # numpy scalars
        return _jsonable(value.item())
    return value


class JsonWriter(Writer):
    """
    One object with "config" ([key, value] pairs), "columns" and "rows".
    Floats keep their shortest round-trip representation (at most 17 significant digits).
    """

    def __init__(self, indent: int | None = None):
        self.indent = indent

    def render_to_string(self, table: ResultTable) -> str:
        doc = {
            "config": [[k, _jsonable(v)] for k, v in table.config],
            "columns": list(table.columns),
            "rows": [[_jsonable(v) for v in row] for row in table.rows],
        }
        return json.dumps(doc, indent=self.indent) + "\n"
