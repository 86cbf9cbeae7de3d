"""Spatial grids, single-photon fields and the lens Fourier transform

Positions are in millimetres. Grids are half-sample centred, so a symmetric
grid never has a sample at the origin and `x[n - 1 - k] == -x[k]` exactly.

A lens of focal length f maps the field in its back focal plane to

    out(u) = 1/sqrt(λf) ∫ exp(-2πi u x / λf) in(x) dx

On grids satisfying the reciprocity relation dx_in * dx_out * n = λf this is an
exact unitary matrix, evaluated either by FFT (`lens_fourier`) or by direct
quadrature (`lens_fourier_quadrature`, kept as a test oracle).
"""

# Standard library imports
import logging
import operator
from dataclasses import dataclass
from typing import Union

# Third party imports
import numpy as np
import scipy.fft
import scipy.special

# QFourier imports
from qfourier import _exceptions

log = logging.getLogger(__name__)

# Relative tolerance used when comparing grid geometries
_GRID_RTOL = 1e-12

# Modes are considered normalized within this tolerance
NORM_TOLERANCE = 1e-9


def _frozen(array: np.ndarray) -> np.ndarray:
    """Return a read-only copy of an array"""
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Grid:
    """Uniform one-dimensional sampling, positions in millimetres"""

    n: int
    x_min: float
    x_max: float

    def __post_init__(self) -> None:
        """Validate the grid geometry"""
        if self.n < 2:
            raise _exceptions.InvalidArgument(f"A grid needs n >= 2, got {self.n}")
        if not self.x_max > self.x_min:
            raise _exceptions.InvalidArgument(
                f"Grid extent must be positive, got [{self.x_min}, {self.x_max}]"
            )

    @property
    def dx(self) -> float:
        """Sample spacing"""
        return (self.x_max - self.x_min) / self.n

    @property
    def center(self) -> float:
        """Midpoint of the grid"""
        return (self.x_min + self.x_max) / 2

    @property
    def is_symmetric(self) -> bool:
        """True if the grid is symmetric about the origin"""
        return self.x_min == -self.x_max

    @property
    def x(self) -> np.ndarray:
        """Sample positions, x_k = x_min + (k + 1/2) dx"""
        offsets = np.arange(self.n) - (self.n - 1) / 2
        return self.center + offsets * self.dx

    def matches(self, other: "Grid") -> bool:
        """Check that two grids sample the same positions"""
        scale = max(abs(self.x_min), abs(self.x_max))
        return (
            self.n == other.n
            and abs(self.x_min - other.x_min) <= _GRID_RTOL * scale
            and abs(self.x_max - other.x_max) <= _GRID_RTOL * scale
        )

    def require(self, other: "Grid", what: str = "field") -> None:
        """Raise an error unless the other grid matches this one"""
        if not self.matches(other):
            raise _exceptions.InvalidArgument(
                f"The {what} is sampled on {other}, expected {self}"
            )

    def index_of(self, position: float) -> int:
        """Index of the sample closest to a position"""
        return int(np.clip(np.floor((position - self.x_min) / self.dx), 0, self.n - 1))


@dataclass(frozen=True)
class OpticsParams:
    """Wavelength and focal length of the lenses, in millimetres"""

    wavelength: float
    focal_length: float

    def __post_init__(self) -> None:
        """Validate the optical parameters"""
        if not (self.wavelength > 0 and self.focal_length > 0):
            raise _exceptions.InvalidArgument(
                "Wavelength and focal length must be positive, got "
                f"λ={self.wavelength}, f={self.focal_length}"
            )

    @property
    def lambda_f(self) -> float:
        """The product λf setting the scale of the Fourier plane"""
        return self.wavelength * self.focal_length


@dataclass(frozen=True, eq=False)
class Field1D:
    """Complex single-photon amplitude sampled on a grid"""

    grid: Grid
    amp: np.ndarray

    def __post_init__(self) -> None:
        """Store the amplitudes as an immutable complex array"""
        amp = np.asarray(self.amp, dtype=complex)
        if amp.shape != (self.grid.n,):
            raise _exceptions.InvalidArgument(
                f"Expected {self.grid.n} samples, got shape {amp.shape}"
            )
        object.__setattr__(self, "amp", _frozen(amp))

    @property
    def norm2(self) -> float:
        """Squared L2-norm, Σ|amp|² dx"""
        return float(np.sum(np.abs(self.amp) ** 2) * self.grid.dx)

    @property
    def intensity(self) -> np.ndarray:
        """Probability density |amp|²"""
        return np.abs(self.amp) ** 2

    @property
    def is_normalized(self) -> bool:
        """True if the norm is one within the mode tolerance"""
        return abs(self.norm2 - 1) < NORM_TOLERANCE

    def inner(self, other: "Field1D") -> complex:
        """Inner product ⟨self|other⟩"""
        self.grid.require(other.grid)
        return complex(np.vdot(self.amp, other.amp) * self.grid.dx)

    def normalized(self) -> "Field1D":
        """Field scaled to unit norm"""
        norm2 = self.norm2
        if norm2 == 0:
            raise _exceptions.InvalidArgument("Can not normalize a zero field")
        return Field1D(self.grid, self.amp / np.sqrt(norm2))

    def reflected(self) -> "Field1D":
        """Relabel x → -x, only defined on symmetric grids"""
        if not self.grid.is_symmetric:
            raise _exceptions.InvalidArgument("Reflection needs a symmetric grid")
        return Field1D(self.grid, self.amp[::-1])

    def __mul__(self, other: Union[complex, np.ndarray]) -> "Field1D":
        """Multiply the amplitudes pointwise or by a scalar"""
        return Field1D(self.grid, self.amp * other)

    __rmul__ = __mul__

    def __add__(self, other: "Field1D") -> "Field1D":
        """Superpose two fields on the same grid"""
        self.grid.require(other.grid)
        return Field1D(self.grid, self.amp + other.amp)


def make_grid(n: int, half_extent: float) -> Grid:
    """Symmetric grid with n samples on [-half_extent, half_extent]"""
    try:
        n = operator.index(n)
    except TypeError:
        raise _exceptions.InvalidArgument(
            f"Sample count must be an integer, got {n!r}"
        ) from None
    if n < 2 or not half_extent > 0:
        raise _exceptions.InvalidArgument(
            f"Need n >= 2 and a positive extent, got n={n}, half_extent={half_extent}"
        )
    return Grid(n=n, x_min=-float(half_extent), x_max=float(half_extent))


def conjugate_grid(grid: Grid, optics: OpticsParams) -> Grid:
    """Symmetric grid in the Fourier plane satisfying dx_in dx_out n = λf"""
    dx_out = optics.lambda_f / (grid.n * grid.dx)
    grid_out = make_grid(grid.n, grid.n * dx_out / 2)
    log.debug("Conjugate of %s is %s", grid, grid_out)
    return grid_out


def check_reciprocity(grid_in: Grid, grid_out: Grid, optics: OpticsParams) -> None:
    """Raise SamplingError unless the lens maps grid_in exactly onto grid_out"""
    if grid_in.n != grid_out.n:
        raise _exceptions.SamplingError(
            f"Lens grids must have equal size, got {grid_in.n} and {grid_out.n}"
        )
    if not (grid_in.is_symmetric and grid_out.is_symmetric):
        raise _exceptions.SamplingError("Lens grids must be symmetric about 0")

    ratio = grid_in.dx * grid_out.dx * grid_in.n / optics.lambda_f
    if abs(ratio - 1) > 1e-9:
        raise _exceptions.SamplingError(
            f"Grids violate dx_in * dx_out * n = λf (ratio {ratio:.12g}); "
            "use conjugate_grid() to build the output grid"
        )


def gaussian_mode(grid: Grid, center: float, waist: float) -> Field1D:
    """Normalized Gaussian mode, amp ∝ exp(-(x - center)² / waist²)"""
    if not waist > 0:
        raise _exceptions.InvalidArgument(f"Waist must be positive, got {waist}")
    if waist < 4 * grid.dx:
        raise _exceptions.ResolutionError(
            f"Waist {waist} is not resolved by spacing {grid.dx} (need >= 4 dx)"
        )

    # Intensity exp(-2 (x - c)² / w²) has standard deviation w / 2
    edge_distance = np.array([center - grid.x_min, grid.x_max - center])
    outside = 0.5 * scipy.special.erfc(np.sqrt(2) * edge_distance / waist)
    if np.any(edge_distance <= 0) or outside.sum() >= 1e-8:
        raise _exceptions.ResolutionError(
            f"Gaussian mode at {center} with waist {waist} is truncated by the grid "
            f"[{grid.x_min}, {grid.x_max}]"
        )

    amp = np.exp(-(((grid.x - center) / waist) ** 2))
    return Field1D(grid, amp).normalized()


def _lens_phases(n: int) -> np.ndarray:
    """Phases exp(2πi c k / n), c = (n - 1) / 2, that turn the kernel into a DFT"""
    c = (n - 1) / 2
    return np.exp(2j * np.pi * c * np.arange(n) / n)


def lens_transform(
    amp: np.ndarray,
    grid_in: Grid,
    grid_out: Grid,
    optics: OpticsParams,
    axis: int = -1,
) -> np.ndarray:
    """Apply the lens kernel along one axis of an amplitude array by FFT

    With x_j = (j - c) dx_in and u_k = (k - c) dx_out the kernel
    exp(-2πi u_k x_j / λf) equals exp(-2πi (k - c)(j - c) / n), which factors
    into pre- and post-phases around a plain DFT.
    """
    check_reciprocity(grid_in, grid_out, optics)
    n = grid_in.n
    c = (n - 1) / 2
    shape = [1] * np.ndim(amp)
    shape[axis] = n
    phases = _lens_phases(n).reshape(shape)

    scale = grid_in.dx / np.sqrt(optics.lambda_f) * np.exp(-2j * np.pi * c * c / n)
    spectrum = scipy.fft.fft(np.asarray(amp, dtype=complex) * phases, axis=axis)
    return scale * phases * spectrum


def lens_matrix(grid_in: Grid, grid_out: Grid, optics: OpticsParams) -> np.ndarray:
    """Direct quadrature kernel, out = lens_matrix @ amp"""
    check_reciprocity(grid_in, grid_out, optics)
    kernel = np.exp(-2j * np.pi * np.outer(grid_out.x, grid_in.x) / optics.lambda_f)
    return kernel * grid_in.dx / np.sqrt(optics.lambda_f)


def lens_fourier(field: Field1D, optics: OpticsParams, out_grid: Grid) -> Field1D:
    """Field in the front focal plane of a lens, computed by FFT"""
    amp = lens_transform(field.amp, field.grid, out_grid, optics)
    return Field1D(out_grid, amp)


def lens_fourier_quadrature(
    field: Field1D, optics: OpticsParams, out_grid: Grid
) -> Field1D:
    """Field in the front focal plane of a lens, computed by direct O(n²) sum"""
    return Field1D(out_grid, lens_matrix(field.grid, out_grid, optics) @ field.amp)
