"""Exceptions for the QFourier package

Custom exceptions used by QFourier for more helpful error messages. Problems
with scenario configurations are `ConfigError`s, problems raised by the
physics modules are `ModelError`s.
"""


class QFourierException(Exception):
    """Base class for all QFourier exceptions"""


class ConfigError(QFourierException):
    """Something is wrong with a scenario configuration"""


class ConversionError(ConfigError):
    """Conversion of a configuration entry failed"""


class EntryError(ConfigError):
    """Something is wrong with a given entry"""


class UnknownFormat(ConfigError):
    """QFourier does not know the given format"""


class ModelError(QFourierException):
    """A numerical model can not be evaluated with the given input"""


class InvalidArgument(ModelError, ValueError):
    """An argument violates the preconditions of an operation"""


class ResolutionError(ModelError):
    """A mode or mask is not resolved by the sampling grid"""


class SamplingError(ModelError):
    """Input and output grids violate the lens reciprocity relation"""


class TruncationError(ModelError):
    """A lattice expansion is truncated too aggressively"""


class QuadratureError(ModelError):
    """A numerical quadrature did not converge"""
