"""Writer for flat key = value files"""

# Standard library imports
from typing import Any

# Third party imports
import pyplugs


@pyplugs.register
def as_flat(data: Any, key_width: int = 20) -> str:
    """Echo a Configuration in the format it is read from"""
    return data.as_str(key_width=key_width) + "\n"
