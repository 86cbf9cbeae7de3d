"""Declarative descriptions of one-dimensional Fourier-plane masks

The specs only hold parameters. Sampling them onto a grid is done by the
plugin with the same name as the spec's `kind`, see `qfourier.masks`.
"""

# Standard library imports
import math
from dataclasses import dataclass
from typing import ClassVar, Tuple, Union

# Third party imports
import numpy as np

# QFourier imports
from qfourier import _exceptions
from qfourier.field import Grid


@dataclass(frozen=True)
class Sinusoidal:
    """Phase grating M(x) = exp(i A_p cos(2πν(x - x0)))"""

    kind: ClassVar[str] = "sinusoidal"
    is_phase_only: ClassVar[bool] = True

    amplitude: float
    nu: float
    x0: float = 0.0

    def __post_init__(self) -> None:
        """Validate the spatial frequency"""
        if not self.nu > 0:
            raise _exceptions.InvalidArgument(
                f"Spatial frequency must be positive, got {self.nu}"
            )

    @property
    def period(self) -> float:
        """Length of one period, 1/ν"""
        return 1 / self.nu


@dataclass(frozen=True)
class ZernikeQuarter:
    """Phase δ on the central quarter of every cell of a periodic lattice"""

    kind: ClassVar[str] = "zernike"
    is_phase_only: ClassVar[bool] = True

    period: float
    delta: float = math.pi / 4
    x0: float = 0.0

    def __post_init__(self) -> None:
        """Validate the period"""
        if not self.period > 0:
            raise _exceptions.InvalidArgument(
                f"Period must be positive, got {self.period}"
            )


@dataclass(frozen=True)
class Aperture:
    """Transmits 1 on [center - width/2, center + width/2] and 0 elsewhere"""

    kind: ClassVar[str] = "aperture"
    is_phase_only: ClassVar[bool] = False

    center: float
    width: float

    def __post_init__(self) -> None:
        """Validate the width"""
        if not self.width > 0:
            raise _exceptions.InvalidArgument(
                f"Aperture width must be positive, got {self.width}"
            )


@dataclass(frozen=True)
class Composite:
    """Pointwise product of several masks, nested composites are flattened"""

    kind: ClassVar[str] = "composite"

    members: Tuple["MaskSpec", ...]

    def __post_init__(self) -> None:
        """Flatten nested composites"""
        members = []
        for member in self.members:
            if isinstance(member, Composite):
                members.extend(member.members)
            else:
                members.append(member)
        if not members:
            raise _exceptions.InvalidArgument("A composite mask needs members")
        object.__setattr__(self, "members", tuple(members))

    @property
    def is_phase_only(self) -> bool:
        """A product of phase-only masks is phase-only"""
        return all(m.is_phase_only for m in self.members)


@dataclass(frozen=True, eq=False)
class Custom:
    """Tabulated transmission on a fixed grid"""

    kind: ClassVar[str] = "custom"

    samples: np.ndarray
    grid: Grid

    def __post_init__(self) -> None:
        """Store the samples as an immutable complex array"""
        samples = np.array(self.samples, dtype=complex)
        if samples.shape != (self.grid.n,):
            raise _exceptions.InvalidArgument(
                f"Custom mask has shape {samples.shape}, grid has {self.grid.n} samples"
            )
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def is_phase_only(self) -> bool:
        """True if every sample has unit modulus"""
        return bool(np.all(np.abs(np.abs(self.samples) - 1) < 1e-15))


MaskSpec = Union[Sinusoidal, ZernikeQuarter, Aperture, Composite, Custom]
