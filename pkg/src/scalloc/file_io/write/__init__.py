"""Functions writing reports in the supported formats."""

__all__ = [
    "SupportedWriteType",
    "WriteFunc",
    "emit",
    "get_write_func",
    "write_csv",
    "write_json",
]

from .csv_tables import write_csv
from .get_func import SupportedWriteType, WriteFunc, emit, get_write_func
from .json_document import write_json
