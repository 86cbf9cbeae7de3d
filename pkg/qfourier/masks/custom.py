"""Tabulated masks"""

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import masks
from qfourier.field import Grid


@pyplugs.register
def sample(spec: masks.Custom, grid: Grid) -> np.ndarray:
    """The tabulated samples, which must be given on the target grid"""
    grid.require(spec.grid, "custom mask")
    return np.array(spec.samples)
