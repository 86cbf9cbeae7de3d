"""Utility functions for qfourier
"""

# Standard library imports
import importlib
import pathlib
import sys
from types import ModuleType
from typing import Any, Optional

# QFourier imports
from qfourier import _exceptions


class FuturePackage:
    """Represents an optional package that is imported when first used"""

    _extras = {"toml": "toml"}

    def __init__(self, package_name: str) -> None:
        """Store reference to package name, to allow future import"""
        self._package_name = package_name
        self._package_obj: Optional[ModuleType] = None

    @property
    def _package(self) -> ModuleType:
        """The underlying package, imported if necessary"""
        if self._package_obj is None:
            self._package_obj = self._import_package()

        return self._package_obj

    def __getattr__(self, key: str) -> Any:
        """Dispatch attribute call to underlying package"""
        return getattr(self._package, key)

    def _import_package(self) -> ModuleType:
        """Import the underlying package

        A missing optional package is a configuration problem: the user asked
        for a format that needs an extra.
        """
        try:
            return importlib.import_module(self._package_name)
        except ImportError:
            msg = f"Could not import {self._package_name!r}."
            extra = self._extras.get(self._package_name)
            if extra:
                py = pathlib.Path(sys.executable).name
                msg += f" Install it using '{py} -m pip install qfourier[{extra}]'"

            raise _exceptions.ConfigError(msg) from None

    def __repr__(self) -> str:
        """Representation that does not import underlying package"""
        return f"{self.__class__.__name__}({self._package_name!r})"


def delayed_import(package_name: str) -> FuturePackage:
    """Delay import until package is used

    Args:
        package_name:  Name of package that will be imported.

    Returns:
        FuturePackage that resolves to package when it's used.
    """
    return FuturePackage(package_name)
