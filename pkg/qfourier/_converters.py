"""Functions that convert configuration strings to other datatypes

Values read from flat configuration files are strings. The converters are
registered as plugins so that they can be referenced by name, for instance
`convert("to_angle", value="0.86pi")`.
"""

# Standard library imports
import functools
import math
import os.path
import pathlib
import re
from typing import Any, Callable, List

# Third party imports
import pyplugs

# QFourier imports
from qfourier import _exceptions

# Set up pyplugs plugins
package, _, plugin = __name__.rpartition(".")
convert = functools.partial(pyplugs.call, package, plugin)
names = functools.partial(pyplugs.funcs, package, plugin)


# Mappings for conversion to booleans
_BOOLEAN_STATES = {
    "0": False,
    "1": True,
    "false": False,
    "true": True,
    "no": False,
    "yes": True,
    "off": False,
    "on": True,
}

# Angles are plain radians or rational multiples of pi: 0.86pi, -pi/2, 3*pi/4
_ANGLE_RE = re.compile(
    r"""^\s*(?P<sign>[+-])?\s*
        (?P<coef>(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)?\s*\*?\s*
        (?P<pi>pi|π)?\s*
        (/\s*(?P<den>\d+\.?\d*))?\s*$""",
    re.VERBOSE | re.IGNORECASE,
)

_LIST_SPLIT_RE = r"\s*,\s*"


def convert_to(dtype: str, value: Any) -> Any:
    """Convert value to the given type"""
    try:
        return convert(f"to_{dtype}", value=value)
    except pyplugs.UnknownPluginFunctionError:
        raise ValueError(f"Conversion to {dtype} is not supported") from None


@pyplugs.register
def to_str(value: Any) -> str:
    """Convert value to a string"""
    return str(value).strip()


@pyplugs.register
def to_int(value: Any) -> int:
    """Convert value to an integer number"""
    if isinstance(value, float) and not value.is_integer():
        raise _exceptions.ConversionError(f"Value {value!r} is not an integer")
    return int(str(value).strip()) if isinstance(value, str) else int(value)


@pyplugs.register
def to_float(value: Any) -> float:
    """Convert value to a floating point number"""
    if isinstance(value, str):
        return to_angle(value) if re.search(r"pi|π", value, re.I) else float(value)
    return float(value)


@pyplugs.register
def to_bool(value: Any) -> bool:
    """Convert value to a boolean"""
    try:
        return _BOOLEAN_STATES[str(value).strip().lower()]
    except KeyError:
        raise _exceptions.ConversionError(
            f"Value {value!r} can not be converted to boolean"
        ) from None


@pyplugs.register
def to_angle(value: Any) -> float:
    """Convert value to an angle in radians, multiples of pi are allowed"""
    if isinstance(value, (int, float)):
        return float(value)

    match = _ANGLE_RE.match(str(value))
    if match is None or not (match.group("coef") or match.group("pi")):
        raise _exceptions.ConversionError(
            f"Value {value!r} can not be converted to an angle"
        )

    angle = float(match.group("coef")) if match.group("coef") else 1.0
    if match.group("pi"):
        angle *= math.pi
    if match.group("den"):
        denominator = float(match.group("den"))
        if denominator == 0:
            raise _exceptions.ConversionError(f"Division by zero in {value!r}")
        angle /= denominator

    return -angle if match.group("sign") == "-" else angle


@pyplugs.register
def to_path(value: Any) -> pathlib.Path:
    """Convert value to a path"""
    value = str(value).strip()

    # Handle ~ shortcut for home directories
    if "~" in value:
        value = os.path.expanduser(value)

    return pathlib.Path(value)


@pyplugs.register
def to_list(
    value: Any,
    split_re: str = _LIST_SPLIT_RE,
    converter: Callable[[str], Any] = str,
) -> List[Any]:
    """Convert value to a list, items are separated by commas"""
    if isinstance(value, (list, tuple)):
        return [converter(v) for v in value]
    return [converter(s) for s in re.split(split_re, str(value).strip()) if s]


@pyplugs.register
def to_float_list(value: Any) -> List[float]:
    """Convert value to a list of floating point numbers"""
    return to_list(value, converter=to_float)


@pyplugs.register
def to_angle_list(value: Any) -> List[float]:
    """Convert value to a list of angles in radians"""
    return to_list(value, converter=to_angle)
