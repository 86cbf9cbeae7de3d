"""Writer for JSON-files

Keys are sorted, so the same data always gives the same file.
"""

# Standard library imports
import json
from typing import Any

# Third party imports
import numpy as np
import pyplugs


def _to_builtin(obj: Any) -> Any:
    """Convert numpy values to their Python counterparts"""
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


@pyplugs.register
def as_json(data: Any, **json_args: Any) -> str:
    """Use json standard library to write JSON file"""
    json_args = {"indent": 2, "sort_keys": True, "default": _to_builtin, **json_args}
    return json.dumps(data, **json_args) + "\n"
