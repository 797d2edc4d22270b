"""Supported configuration options.

Used throughout the code to ensure consistency. These should be kept in sync with the
corresponding options of the Pydantic models.
"""

__all__ = [
    "SupportedFading",
    "SupportedFormat",
    "SupportedPolicy",
    "SupportedRateModel",
    "SupportedUtility",
]

from .supported_fading import SupportedFading
from .supported_formats import SupportedFormat
from .supported_policies import SupportedPolicy
from .supported_rate_models import SupportedRateModel
from .supported_utilities import SupportedUtility
