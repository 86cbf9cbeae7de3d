"""Versioned defaults for scenario configurations

The defaults live in defaults.cfg and are read with `read_defaults`.
"""

# Standard library imports
from importlib import resources

DEFAULTS_VERSION = 1
DEFAULTS_SOURCE = "<defaults>"


def read_defaults() -> str:
    """Text of the packaged defaults file"""
    return resources.read_text(__package__, "defaults.cfg")
