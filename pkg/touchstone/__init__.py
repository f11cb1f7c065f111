"""Touchstone v1 (.sNp) and generic CSV input/output."""

from touchstone.csv_io import read_csv, write_csv
from touchstone.errors import (
    DataCountMismatch,
    MalformedCsv,
    InvalidNetworkData,
    MalformedOptionLine,
    NonMonotonicFrequency,
    NormalizationMismatch,
    TouchstoneError,
    UnsupportedRepresentation,
    UnsupportedVersionKeyword,
)
from touchstone.options import DataFormat, FreqUnit, Param, TouchstoneOptions
from touchstone.reader import load, parse, ports_from_filename
from touchstone.writer import check_writable, write

__all__ = [
    "DataCountMismatch", "InvalidNetworkData", "MalformedCsv", "MalformedOptionLine", "NonMonotonicFrequency",
    "NormalizationMismatch", "TouchstoneError", "UnsupportedRepresentation",
    "UnsupportedVersionKeyword", "DataFormat", "FreqUnit", "Param", "TouchstoneOptions",
    "check_writable", "load", "parse", "ports_from_filename", "read_csv", "write", "write_csv",
]
