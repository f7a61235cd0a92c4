from .base import NEVER, ResultTable, Writer, to_writer, write_table
from .csv_writer import CsvWriter
from .json_writer import JsonWriter

__all__ = ["NEVER", "ResultTable", "Writer", "to_writer", "write_table", "CsvWriter", "JsonWriter"]
