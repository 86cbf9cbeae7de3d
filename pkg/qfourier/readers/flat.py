"""Reader for flat key = value files

One entry per line, `#` starts a comment, lists are comma-separated. This is
the default format of scenario configurations.
"""

# Standard library imports
from typing import Dict

# Third party imports
import pyplugs

# QFourier imports
from qfourier import _exceptions
from qfourier.readers import Entry


@pyplugs.register
def from_flat(string: str, source: str = "<string>") -> Dict[str, Entry]:
    """Read key = value lines, keeping track of line numbers"""
    entries: Dict[str, Entry] = {}
    for line_num, line in enumerate(string.splitlines(), start=1):
        content = line.partition("#")[0].strip()
        if not content:
            continue

        key, delimiter, value = content.partition("=")
        key = key.strip()
        if not delimiter or not key:
            raise _exceptions.ConfigError(
                f"{source}:{line_num}: expected 'key = value', got {line.strip()!r}"
            )
        if key in entries:
            raise _exceptions.EntryError(
                f"{source}:{line_num}: duplicate entry {key!r} "
                f"(first given on line {entries[key].line})"
            )

        entries[key] = Entry(value.strip(), line_num)

    return entries
