"""Reader for TOML-files

Scenario configurations are flat, so only top-level keys are accepted.
"""

# Standard library imports
import re
from typing import Dict

# Third party imports
import pyplugs

# QFourier imports
from qfourier import _exceptions
from qfourier._util import delayed_import
from qfourier.readers import Entry

# Delayed imports
toml = delayed_import("toml")


@pyplugs.register
def from_toml(string: str, source: str = "<string>") -> Dict[str, Entry]:
    """Use toml library to read a flat TOML file"""
    try:
        data = toml.loads(string)
    except toml.TomlDecodeError as err:
        raise _exceptions.ConfigError(f"{source}: {err}") from None

    lines = _key_lines(string)
    entries = {}
    for key, value in data.items():
        if isinstance(value, dict):
            raise _exceptions.EntryError(
                f"{source}:{lines.get(key, '?')}: tables are not supported ({key!r})"
            )
        entries[key] = Entry(value, lines.get(key))

    return entries


def _key_lines(string: str) -> Dict[str, int]:
    """Find the line where each top-level key is defined"""
    lines = {}
    for line_num, line in enumerate(string.splitlines(), start=1):
        match = re.match(r"\s*([A-Za-z0-9_-]+)\s*=", line)
        if match:
            lines.setdefault(match.group(1), line_num)
    return lines
