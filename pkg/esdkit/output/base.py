from __future__ import annotations
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any
import logging

logger = logging.getLogger(__name__)

# written in place of a transition or certified time that does not occur
NEVER = "never"


@dataclass
class ResultTable:
    """Column-named rows plus the configuration items that produced them."""

    columns: list[str]
    rows: list[tuple] = field(default_factory=list)
    config: list[tuple[str, Any]] = field(default_factory=list)

    def add_row(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"Row has {len(values)} values for {len(self.columns)} columns")
        self.rows.append(tuple(values))

    def column(self, name: str) -> list:
        k = self.columns.index(name)
        return [row[k] for row in self.rows]


class Writer(ABC):
    """Abstract base class for result-table file formats."""

    @abstractmethod
    def render_to_string(self, table: ResultTable) -> str:
        """Serialize the table and return the file contents."""
        ...

    def render_to_file(self, path: Path | str, table: ResultTable) -> None:
        content = self.render_to_string(table)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(content)


def to_writer(target: str | Writer | Path) -> Writer:
    """Pick a writer by format name, or by the suffix of an output path."""
    from .csv_writer import CsvWriter
    from .json_writer import JsonWriter

    if isinstance(target, Writer):
        return target
    if isinstance(target, Path):
        target = target.suffix
    if target in ["csv", ".csv"]:
        writer: Writer = CsvWriter()
    elif target in ["json", ".json"]:
        writer = JsonWriter()
    else:
        raise NotImplementedError(f"Unknown output format: {target}")
    logger.debug("Using %s for %r", type(writer).__name__, target)
    return writer


def write_table(table: ResultTable, path: Path | str, fmt: str | None = None) -> None:
    to_writer(fmt or Path(path)).render_to_file(path, table)
