"""Functions writing experiment reports to files."""

__all__ = [
    "SupportedWriteType",
    "WriteFunc",
    "emit",
    "get_write_func",
    "write",
]

from . import write
from .write import SupportedWriteType, WriteFunc, emit, get_write_func
