"""Support simple autodetection of file formats"""

# Standard library imports
import json
import pathlib
from importlib import resources
from typing import Dict, Iterable, List, Union

# QFourier imports
from qfourier._exceptions import UnknownFormat

# Lazily read from formats.json when needed
FORMATS: Dict[str, List[str]] = {}


def guess_format(file_path: Union[str, pathlib.Path]) -> str:
    """Guess the format of a file based on the file suffix"""
    if not FORMATS:
        _read_formats()

    file_path = pathlib.Path(file_path)
    suffix = file_path.suffix.lower()
    for format, suffixes in FORMATS.items():
        if suffix in suffixes:
            return format

    raise UnknownFormat(f"Could not guess format of {file_path}")


def require(format: str, available: Iterable[str]) -> None:
    """Check that a format is handled by one of the available plugins"""
    available = list(available)
    if format not in available:
        raise UnknownFormat(
            f"Unknown format {format!r}, use one of {', '.join(sorted(available))}"
        )


def _read_formats() -> None:
    """Read information about formats from json-file"""
    formats_string = resources.read_text(__package__, "formats.json")
    FORMATS.update(json.loads(formats_string))
