"""Test conversion of configuration values"""

# Standard library imports
import math

# Third party imports
import pytest

# QFourier imports
from qfourier import _converters, _exceptions, convert_to


@pytest.mark.parametrize(
    "value, expected",
    [
        ("0.86pi", 0.86 * math.pi),
        ("pi", math.pi),
        ("pi/2", math.pi / 2),
        ("-pi/2", -math.pi / 2),
        ("3*pi/4", 3 * math.pi / 4),
        ("3pi/4", 3 * math.pi / 4),
        ("π/4", math.pi / 4),
        ("1.25", 1.25),
        ("0", 0.0),
        (0.5, 0.5),
    ],
)
def test_to_angle(value, expected):
    """Test that angles are read as radians"""
    assert _converters.to_angle(value) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("value", ["", "pi pi", "x", "pi/0", "2/"])
def test_to_angle_fails(value):
    """Test that malformed angles raise a ConversionError"""
    with pytest.raises(_exceptions.ConversionError):
        _converters.to_angle(value)


def test_to_float_accepts_pi():
    """Test that floats may be written as multiples of pi"""
    assert _converters.to_float("2pi") == pytest.approx(2 * math.pi)
    assert _converters.to_float("808e-6") == 808e-6


@pytest.mark.parametrize("value", ["yes", "True", "on", "1"])
def test_to_bool_true(value):
    """Test that common spellings of true are recognized"""
    assert _converters.to_bool(value) is True


def test_to_bool_fails():
    """Test that unknown booleans raise a ConversionError"""
    with pytest.raises(_exceptions.ConversionError):
        _converters.to_bool("maybe")


def test_to_int_rejects_fractions():
    """Test that a non-integral float is not silently truncated"""
    with pytest.raises(_exceptions.ConversionError):
        _converters.to_int(2.5)


def test_to_list():
    """Test that lists are split on commas"""
    assert _converters.to_list("csv, json ,pgm") == ["csv", "json", "pgm"]
    assert _converters.to_list(["a", "b"]) == ["a", "b"]


def test_to_angle_list():
    """Test that lists of angles are converted item by item"""
    assert _converters.to_angle_list("0, pi") == pytest.approx([0, math.pi])


def test_convert_to_by_name():
    """Test that converters can be called by type name"""
    assert convert_to("int", "7") == 7


def test_convert_to_unknown_type():
    """Test that an unknown type gives a ValueError"""
    with pytest.raises(ValueError):
        convert_to("complex_matrix", "7")


def test_converter_names():
    """Test that converters are registered as plugins"""
    assert {"to_angle", "to_float_list", "to_path"} <= set(_converters.names())
