"""Test Configuration object"""

# Standard library imports
import math
import pathlib

# Third party imports
import pytest

# QFourier imports
from qfourier import Configuration, _exceptions


def test_entries_are_strings(cfg):
    """Test that flat entries are stored as they are read"""
    assert cfg["amplitude"] == "0.86pi"
    assert cfg.n == "4096"


def test_typed_accessors(cfg):
    """Test that entries are converted on access"""
    assert cfg.to_int("n") == 4096
    assert cfg.to_float("wavelength") == pytest.approx(808e-6)
    assert cfg.to_angle("amplitude") == pytest.approx(0.86 * math.pi)
    assert cfg.to_bool("verbose") is True
    assert cfg.to_angle_list("phases") == pytest.approx([0, math.pi / 2, -math.pi / 2])


def test_to_path_expands_home(cfg):
    """Test that ~ is expanded in paths"""
    path = cfg.to_path("output_dir")
    assert isinstance(path, pathlib.Path)
    assert "~" not in str(path)


def test_source_has_line_number(cfg):
    """Test that every entry remembers the line it was read from"""
    assert cfg.get_source("scenario") == "test.cfg:2"
    assert cfg.get_source("n") == "test.cfg:6"


def test_sources_without_line_numbers(cfg):
    """Test that sources are listed without line numbers"""
    assert cfg.sources == {"test.cfg"}


def test_conversion_error_names_source(cfg):
    """Test that a failed conversion points at the offending line"""
    with pytest.raises(_exceptions.ConversionError, match=r"test.cfg:3: wavelength"):
        cfg.to_int("wavelength")


def test_missing_entry(cfg):
    """Test that a missing entry raises a helpful error"""
    with pytest.raises(_exceptions.EntryError, match="pitch"):
        cfg.to_float("pitch")


def test_unknown_source(cfg):
    """Test that asking for the source of a missing entry fails"""
    with pytest.raises(_exceptions.EntryError):
        cfg.get_source("pitch")


def test_attribute_error(cfg):
    """Test that missing entries raise AttributeError with dot access"""
    with pytest.raises(AttributeError):
        cfg.pitch


def test_update_entry_overrides(cfg):
    """Test that a later update wins and records its source"""
    cfg.update_entry("n", "1024", source="--n (command line)")
    assert cfg.to_int("n") == 1024
    assert cfg.get_source("n") == "--n (command line)"


def test_update_from_dict(cfg):
    """Test that a configuration can be updated from a dictionary"""
    cfg.update_from_dict({"pitch": 0.25}, source="dict")
    assert cfg.to_float("pitch") == 0.25
    assert cfg.get_source("pitch") == "dict"


def test_from_dict():
    """Test that a configuration can be created from a dictionary"""
    cfg = Configuration.from_dict({"n": 64, "phases": [0, 1]}, name="dict")
    assert cfg.to_int("n") == 64
    assert cfg.to_float_list("phases") == [0.0, 1.0]


def test_as_str_roundtrip(cfg):
    """Test that the flat echo can be read back"""
    echo = Configuration.from_str(cfg.as_str())
    assert echo.as_dict() == cfg.as_dict()


def test_as_flat_renders_values():
    """Test that values are rendered in the flat format"""
    cfg = Configuration.from_dict({"flag": True, "values": [1.5, 2.0], "name": "x"})
    assert cfg.as_flat() == {"flag": "true", "values": "1.5, 2.0", "name": "x"}


def test_from_file(sample_dir):
    """Test that a flat configuration file can be read"""
    cfg_path = sample_dir / "small.cfg"
    cfg = Configuration.from_file(cfg_path)

    assert cfg.to_int("n") == 512
    assert cfg.get_source("n") == f"{cfg_path}:3"


def test_from_missing_file(tmp_path):
    """Test that a missing file is a configuration error"""
    with pytest.raises(_exceptions.ConfigError, match="Could not read"):
        Configuration.from_file(tmp_path / "missing.cfg")


def test_repr(cfg):
    """Test the representation of a Configuration"""
    assert repr(cfg) == "Configuration(name='test_config')"
