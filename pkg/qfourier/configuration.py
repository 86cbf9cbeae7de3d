"""A QFourier Configuration

The `Configuration` is a flat dictionary of scenario entries. Every entry
remembers where it came from, typically a `path:line` location, so that
validation errors can point at the offending line.

Values are stored as they are read (mostly strings) and converted on access
through the typed accessors, `cfg.to_float("wavelength")` and friends.
"""

# Standard library imports
import functools
import logging
import pathlib
from collections import UserDict
from typing import Any, Callable, Dict, List, Optional, Set, Union

# QFourier imports
from qfourier import _converters, _exceptions, readers

log = logging.getLogger(__name__)


def _dispatch_to(converter: Callable[..., Any]) -> Callable[..., Any]:
    """Decorator for dispatching methods to converter functions

    This outer closure stores the converter parameter.
    """

    def _decorator_dispatch_to(func: Callable[..., Any]) -> Callable[..., Any]:
        """Decorate the given function"""

        @functools.wraps(func)
        def _wrapper_dispatch_to(self: "Configuration", key: str) -> Any:
            """Call the converter function, report the source on failure"""
            value = func(self, key)
            try:
                return converter(value=value)
            except (ValueError, TypeError, _exceptions.ConversionError) as err:
                raise _exceptions.ConversionError(
                    f"{self.get_source(key)}: {key} = {value!r}: {err}"
                ) from None

        return _wrapper_dispatch_to

    return _decorator_dispatch_to


class Configuration(UserDict):
    """Flat configuration with per-entry sources"""

    def __init__(self, name: Optional[str] = None) -> None:
        """Create an empty configuration"""
        super().__init__()
        self.name = name
        self._source: Dict[str, str] = {}

    @classmethod
    def from_dict(
        cls, entries: Dict[str, Any], *, name: Optional[str] = None, source: str = ""
    ) -> "Configuration":
        """Create a Configuration from a dictionary"""
        cfg = cls(name=name)
        cfg.update_from_dict(entries, source=source)
        return cfg

    @classmethod
    def from_file(
        cls,
        file_path: Union[str, pathlib.Path],
        file_format: Optional[str] = None,
        *,
        name: Optional[str] = None,
        encoding: str = "utf-8",
    ) -> "Configuration":
        """Create a Configuration from a file"""
        cfg = cls(name=name)
        cfg.update_from_file(file_path, file_format=file_format, encoding=encoding)
        return cfg

    @classmethod
    def from_str(
        cls,
        string: str,
        format: str = "flat",
        *,
        name: Optional[str] = None,
        source: str = "<string>",
    ) -> "Configuration":
        """Create a Configuration from a string"""
        cfg = cls(name=name)
        cfg.update_from_str(string, format=format, source=source)
        return cfg

    def update_entry(self, key: str, value: Any, source: str = "") -> None:
        """Update one entry in configuration"""
        self.data[key] = value
        self._source[key] = source

    def update_from_dict(self, entries: Dict[str, Any], source: str = "") -> None:
        """Update the configuration from a dictionary

        Values given as reader entries carry their own line numbers.
        """
        for key, value in entries.items():
            if isinstance(value, readers.Entry):
                line = "" if value.line is None else f":{value.line}"
                self.update_entry(key, value.value, source=f"{source}{line}")
            else:
                self.update_entry(key, value, source=source)

    def update_from_file(
        self,
        file_path: Union[str, pathlib.Path],
        file_format: Optional[str] = None,
        encoding: str = "utf-8",
    ) -> None:
        """Update the configuration from a file"""
        file_path = pathlib.Path(file_path)
        try:
            file_format, entries = readers.from_file(
                file_path=file_path, file_format=file_format, encoding=encoding
            )
        except OSError as err:
            raise _exceptions.ConfigError(
                f"Could not read {file_path}: {err.strerror}"
            ) from None

        log.debug("Read %d entries from %s", len(entries), file_path)
        self.update_from_dict(entries, source=str(file_path))

    def update_from_str(
        self, string: str, format: str = "flat", *, source: str = "<string>"
    ) -> None:
        """Update the configuration from a string"""
        entries = readers.from_str(format, string=string, source=source)
        self.update_from_dict(entries, source=source)

    @property
    def sources(self) -> Set[str]:
        """Set of sources in configuration, without line numbers"""
        return {s.rpartition(":")[0] or s for s in self._source.values()}

    def get_source(self, key: str) -> str:
        """Source of the given key"""
        try:
            return self._source[key]
        except KeyError:
            raise _exceptions.EntryError(f"Unknown entry {key!r}") from None

    def as_dict(self) -> Dict[str, Any]:
        """Convert Configuration to a dictionary"""
        return dict(self.data)

    def as_flat(self) -> Dict[str, str]:
        """Entries rendered as strings in the flat key = value format"""
        return {key: _repr_flat(value) for key, value in self.data.items()}

    def as_str(self, *, key_width: int = 20) -> str:
        """Represent Configuration in the flat key = value format"""
        lines = [] if self.name is None else [f"# {self.name}"]
        for key, value in self.data.items():
            lines.append(f"{key:<{key_width}} = {_repr_flat(value)}")
        return "\n".join(lines)

    #
    # Add converters used to convert entries to certain types
    #
    def _get_value(self, key: str) -> Any:
        """Get single value, raise a helpful error if the key is missing"""
        try:
            return self.data[key]
        except KeyError:
            where = "" if self.name is None else f" in {self.name}"
            raise _exceptions.EntryError(
                f"Missing entry {key!r}{where} ({', '.join(sorted(self.sources))})"
            ) from None

    @_dispatch_to(_converters.to_str)
    def to_str(self, key: str) -> str:
        """Convert entry to string"""
        return self._get_value(key)

    @_dispatch_to(_converters.to_int)
    def to_int(self, key: str) -> int:
        """Convert entry to integer number"""
        return self._get_value(key)

    @_dispatch_to(_converters.to_float)
    def to_float(self, key: str) -> float:
        """Convert entry to a floating point number"""
        return self._get_value(key)

    @_dispatch_to(_converters.to_bool)
    def to_bool(self, key: str) -> bool:
        """Convert entry to a boolean"""
        return self._get_value(key)

    @_dispatch_to(_converters.to_angle)
    def to_angle(self, key: str) -> float:
        """Convert entry to an angle in radians"""
        return self._get_value(key)

    @_dispatch_to(_converters.to_path)
    def to_path(self, key: str) -> pathlib.Path:
        """Convert entry to a path"""
        return self._get_value(key)

    @_dispatch_to(_converters.to_list)
    def to_list(self, key: str) -> List[str]:
        """Convert entry to a list of strings"""
        return self._get_value(key)

    @_dispatch_to(_converters.to_float_list)
    def to_float_list(self, key: str) -> List[float]:
        """Convert entry to a list of floating point numbers"""
        return self._get_value(key)

    @_dispatch_to(_converters.to_angle_list)
    def to_angle_list(self, key: str) -> List[float]:
        """Convert entry to a list of angles in radians"""
        return self._get_value(key)

    #
    # Dunder methods
    #
    def __getattr__(self, key: str) -> Any:
        """Get entries using attribute (dot) syntax"""
        if key.startswith("_") or key in ("data", "name"):
            raise AttributeError(key)
        try:
            return self.data[key]
        except KeyError:
            raise AttributeError(
                f"Configuration {self.name} has no entry {key!r}"
            ) from None

    def __repr__(self) -> str:
        """Simple representation of a Configuration"""
        if self.name is None:
            return f"{self.__class__.__name__}()"
        else:
            return f"{self.__class__.__name__}(name={self.name!r})"

    def __str__(self) -> str:
        """Full representation of a Configuration"""
        return self.as_str()


def _repr_flat(value: Any) -> str:
    """Represent value in the flat key = value format"""
    if isinstance(value, bool):
        return repr(value).lower()

    if isinstance(value, (list, tuple)):
        return ", ".join(_repr_flat(v) for v in value)

    if isinstance(value, float):
        return repr(value)

    return str(value)
