"""Enum base class supporting membership tests on values."""

from enum import Enum, EnumMeta
from typing import Any


class _ValueContainerEnum(EnumMeta):
    """Metaclass adding value membership to enums."""

    def __contains__(cls, item: Any) -> bool:
        """Whether `item` is a member or the value of a member.

        Parameters
        ----------
        item : Any
            Member or raw value.

        Returns
        -------
        bool
            True if `item` resolves to a member.
        """
        try:
            cls(item)
        except ValueError:
            return False
        return True


class BaseEnum(Enum, metaclass=_ValueContainerEnum):
    """Enum allowing `value in Enum` checks.

    Example
    -------
    >>> from scalloc.utils.base_enum import BaseEnum
    >>> class Format(str, BaseEnum):
    ...     CSV = "csv"
    >>> "csv" in Format
    True
    >>> "parquet" in Format
    False
    """

    @classmethod
    def values(cls) -> list:
        """All member values, in declaration order.

        Returns
        -------
        list
            Member values.
        """
        return [member.value for member in cls]
