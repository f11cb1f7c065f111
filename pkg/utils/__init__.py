"""Utilities module."""

from utils.constants import EXIT_CODES, TOLERANCES, TOUCHSTONE_UNITS
from utils.decorators import log_method

__all__ = ["EXIT_CODES", "TOLERANCES", "TOUCHSTONE_UNITS", "log_method"]
