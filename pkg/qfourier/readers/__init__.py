"""Plugins for reading scenario configuration formats

Every reader returns a dictionary of `Entry` values so that the configuration
can report the line an entry was read from.
"""

# Standard library imports
import pathlib
from typing import Dict, NamedTuple, Optional, Tuple

# Third party imports
import pyplugs

# QFourier imports
from qfourier import formats

names = pyplugs.names_factory(__package__)
from_str = pyplugs.call_factory(__package__)


class Entry(NamedTuple):
    """One raw configuration value and the line it was read from"""

    value: object
    line: Optional[int] = None


def from_file(
    file_path: pathlib.Path,
    file_format: Optional[str] = None,
    encoding: str = "utf-8",
) -> Tuple[str, Dict[str, Entry]]:
    """Read a configuration from file with the given format

    If the file format is not specified, it is deduced from the file path suffix.
    """
    file_format = (
        formats.guess_format(file_path) if file_format is None else file_format
    )
    formats.require(file_format, names())
    return file_format, from_str(
        file_format,
        string=file_path.read_text(encoding=encoding),
        source=str(file_path),
    )
