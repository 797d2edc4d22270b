"""Report formats supported by scalloc."""

from scalloc.utils.base_enum import BaseEnum


class SupportedFormat(str, BaseEnum):
    """Output formats of experiment reports.

    Attributes
    ----------
    CSV : str
        RFC-4180 tables, one file per metric.
    JSON : str
        Single UTF-8 document with sorted keys.
    """

    CSV = "csv"
    JSON = "json"
