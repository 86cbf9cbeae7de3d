"""Fourier-plane masks and their sampling onto grids

Each kind of mask spec is sampled by a plugin in this package, named after
the spec's `kind`. All plugins evaluate the mask pointwise at the sample
positions, so they are exact up to floating point.
"""

# Standard library imports
import logging
import pathlib
from typing import List, Union

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import _exceptions
from qfourier.field import Grid
from qfourier.masks._specs import (  # noqa
    Aperture,
    Composite,
    Custom,
    MaskSpec,
    Sinusoidal,
    ZernikeQuarter,
)

log = logging.getLogger(__name__)

names = pyplugs.names_factory(__package__)
_sample = pyplugs.call_factory(__package__)

# Tolerance, in units of the grid spacing, when matching custom mask positions
_POSITION_TOL = 1e-9


def sample_mask(spec: MaskSpec, grid: Grid) -> np.ndarray:
    """Complex transmission of a mask at every sample of a grid"""
    samples = _sample(spec.kind, spec=spec, grid=grid)
    log.debug("Sampled %s mask on %d points", spec.kind, grid.n)
    return samples


def two_photon_mask(spec: MaskSpec, grid: Grid) -> np.ndarray:
    """The outer product M(x₁)M(x₂) seen by a photon pair"""
    samples = sample_mask(spec, grid)
    return np.outer(samples, samples)


def require_resolved(period: float, grid: Grid) -> None:
    """Raise ResolutionError unless a periodic mask is resolved by the grid

    The grid must span at least two periods with spacing below period/8.
    """
    if grid.x_max - grid.x_min < 2 * period:
        raise _exceptions.ResolutionError(
            f"Grid of extent {grid.x_max - grid.x_min} spans less than two mask "
            f"periods of {period}"
        )
    if not grid.dx < period / 8:
        raise _exceptions.ResolutionError(
            f"Mask period {period} is undersampled by spacing {grid.dx} "
            "(need dx < period / 8)"
        )


def load_custom_mask(file_path: Union[str, pathlib.Path], grid: Grid) -> Custom:
    """Read a phase-only mask from a two-column text file of x and phase

    Lines starting with `#` are comments. Positions must equal the grid's
    sample positions, one line per sample, in order.
    """
    file_path = pathlib.Path(file_path)
    positions: List[float] = []
    phases: List[float] = []
    line_nums: List[int] = []
    for line_num, line in enumerate(file_path.read_text().splitlines(), start=1):
        content = line.partition("#")[0].split()
        if not content:
            continue
        try:
            x, phase = (float(v) for v in content)
        except ValueError:
            raise _exceptions.InvalidArgument(
                f"{file_path}:{line_num}: expected two numbers 'x phase', "
                f"got {line.strip()!r}"
            ) from None
        positions.append(x)
        phases.append(phase)
        line_nums.append(line_num)

    if len(positions) != grid.n:
        raise _exceptions.InvalidArgument(
            f"{file_path}: has {len(positions)} samples, the grid has {grid.n}"
        )

    mismatch = np.abs(np.array(positions) - grid.x) > _POSITION_TOL * grid.dx
    if np.any(mismatch):
        idx = int(np.argmax(mismatch))
        raise _exceptions.InvalidArgument(
            f"{file_path}:{line_nums[idx]}: position {positions[idx]!r} does not "
            f"match grid sample {float(grid.x[idx])!r}"
        )

    return Custom(samples=np.exp(1j * np.array(phases)), grid=grid)
