"""The 4-f filter: lens, Fourier-plane mask, lens

Two lenses of equal focal length share a focal plane holding the mask. The
chain maps in(x) to out(-x); the output is relabelled with x → -x so that an
identity mask gives back the input.

`LatticeSetup` chooses grids for the lattice experiments, where beams and
detectors sit on sites x_s = site_origin + s·d and the mask period in the
Fourier plane is λf/d.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union

# Third party imports
import numpy as np

# QFourier imports
from qfourier import _exceptions, masks
from qfourier.biphoton import (
    BiphotonState,
    DetectorArray,
    apply_single_photon_op,
    binned_marginal,
    binned_probabilities,
)
from qfourier.field import Field1D, Grid, OpticsParams, conjugate_grid, make_grid
from qfourier.ops import LensOp, MaskOp, ReflectOp

log = logging.getLogger(__name__)

# Fewest Fourier-plane samples allowed per mask period
MIN_SAMPLES_PER_PERIOD = 8


def _chain(
    grid: Grid, mask: masks.MaskSpec, optics: OpticsParams
) -> Tuple[LensOp, MaskOp, LensOp, ReflectOp]:
    """The four single-photon maps making up the 4-f filter"""
    fourier_grid = conjugate_grid(grid, optics)
    log.debug("4-f filter with a %s mask on %d samples", mask.kind, grid.n)
    return (
        LensOp(optics, grid, fourier_grid),
        MaskOp(masks.sample_mask(mask, fourier_grid), fourier_grid),
        LensOp(optics, fourier_grid, grid),
        ReflectOp(grid),
    )


def run_4f_single(
    field: Field1D, mask: masks.MaskSpec, optics: OpticsParams
) -> Field1D:
    """Send one photon through the 4-f filter"""
    for op in _chain(field.grid, mask, optics):
        field = op(field)
    return field


def run_4f_biphoton(
    state: BiphotonState, mask: masks.MaskSpec, optics: OpticsParams
) -> BiphotonState:
    """Send both photons of a pair through the 4-f filter"""
    for op in _chain(state.grid, mask, optics):
        state = apply_single_photon_op(state, op)
    return state


def fourier_transmission(
    state: Union[Field1D, BiphotonState],
    mask: masks.MaskSpec,
    optics: OpticsParams,
) -> float:
    """Norm² left after the first lens and the Fourier-plane mask"""
    lens, mask_op, _, _ = _chain(state.grid, mask, optics)
    if isinstance(state, Field1D):
        return mask_op(lens(state)).norm2

    masked = apply_single_photon_op(apply_single_photon_op(state, lens), mask_op)
    return masked.norm2


def binned_intensity(
    state: Union[Field1D, BiphotonState], detectors: DetectorArray
) -> np.ndarray:
    """Photon counts per detector bin, for one photon or a pair"""
    if isinstance(state, Field1D):
        return binned_probabilities(state, detectors)
    return binned_marginal(state, detectors)


@dataclass(frozen=True)
class LatticeSetup:
    """Grids and lattice registration for the lattice experiments

    The input grid has dx = pitch / samples_per_site, so every lattice site
    and detector edge falls on a sample boundary, and n / samples_per_site
    Fourier samples fit one mask period exactly.
    """

    optics: OpticsParams
    pitch: float
    samples_per_site: int = 64
    n: int = 4096
    n_max: int = 12
    site_origin: Optional[float] = None

    def __post_init__(self) -> None:
        """Fill in the site origin and validate the sampling"""
        if self.site_origin is None:
            object.__setattr__(self, "site_origin", -self.pitch / 2)
        if not self.pitch > 0:
            raise _exceptions.InvalidArgument(
                f"Lattice pitch must be positive, got {self.pitch}"
            )
        if self.samples_per_site < 4 or self.samples_per_site % 4:
            raise _exceptions.InvalidArgument(
                "samples_per_site must be a positive multiple of 4, got "
                f"{self.samples_per_site}"
            )
        if self.n % self.samples_per_site:
            raise _exceptions.InvalidArgument(
                f"n = {self.n} is not a multiple of samples_per_site = "
                f"{self.samples_per_site}, the mask period would not fit the grid"
            )
        if self.samples_per_period < MIN_SAMPLES_PER_PERIOD:
            raise _exceptions.ResolutionError(
                f"Only {self.samples_per_period} Fourier samples per mask period, "
                f"need at least {MIN_SAMPLES_PER_PERIOD}"
            )
        if self.n_max < 0:
            raise _exceptions.InvalidArgument(f"n_max must be >= 0, got {self.n_max}")

        edge = max(abs(self.site_position(s)) for s in (-self.n_max, self.n_max))
        if edge + self.pitch >= self.grid.x_max:
            raise _exceptions.InvalidArgument(
                f"Sites up to ±{self.n_max} do not fit on the grid "
                f"[{self.grid.x_min}, {self.grid.x_max}], increase n"
            )

    @property
    def dx(self) -> float:
        """Input plane sample spacing"""
        return self.pitch / self.samples_per_site

    @property
    def samples_per_period(self) -> int:
        """Number of Fourier plane samples in one mask period"""
        return self.n // self.samples_per_site

    @property
    def grid(self) -> Grid:
        """Input and output plane grid"""
        return make_grid(self.n, self.n * self.dx / 2)

    @property
    def fourier_grid(self) -> Grid:
        """Grid in the shared focal plane of the lenses"""
        return conjugate_grid(self.grid, self.optics)

    @property
    def nu(self) -> float:
        """Mask frequency ν = d / λf that registers the walk with the lattice"""
        return self.pitch / self.optics.lambda_f

    @property
    def mask_period(self) -> float:
        """Length of one mask period in the Fourier plane"""
        return self.optics.lambda_f / self.pitch

    @property
    def sites(self) -> range:
        """Detector sites, -n_max to n_max"""
        return range(-self.n_max, self.n_max + 1)

    def site_position(self, site: int) -> float:
        """Position of a lattice site"""
        return self.site_origin + site * self.pitch  # type: ignore[operator]

    def detectors(
        self, half_width: float, sites: Optional[Iterable[int]] = None
    ) -> DetectorArray:
        """Detectors of half-width w centred on lattice sites"""
        return DetectorArray.lattice(
            self.pitch,
            half_width,
            self.sites if sites is None else sites,
            origin=self.site_origin,  # type: ignore[arg-type]
        )

    def sinusoidal_mask(self, amplitude: float, x0: float = 0.0) -> masks.Sinusoidal:
        """Sinusoidal grating registered with the lattice"""
        return masks.Sinusoidal(amplitude=amplitude, nu=self.nu, x0=x0)

    def zernike_mask(self, delta: float, x0: float = 0.0) -> masks.ZernikeQuarter:
        """Quarter-cell filter with the same period as the sinusoidal grating"""
        return masks.ZernikeQuarter(period=self.mask_period, delta=delta, x0=x0)
