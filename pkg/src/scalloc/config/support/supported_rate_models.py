"""Rate models supported by scalloc."""

from scalloc.utils.base_enum import BaseEnum


class SupportedRateModel(str, BaseEnum):
    """Modulation and coding schemes.

    Attributes
    ----------
    TS : str
        Time sharing, one user per fraction of the block.
    SC : str
        Superposition coding with successive interference cancellation.
    """

    TS = "ts"
    SC = "sc"
