"""Utilities."""

__all__ = [
    "BaseEnum",
    "ProgressBar",
    "derive_generator",
    "get_logger",
    "get_process_memory",
]

from .base_enum import BaseEnum
from .logging import ProgressBar, get_logger
from .ram import get_process_memory
from .seeding import derive_generator
