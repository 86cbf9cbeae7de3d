"""Quarter-cell phase filter

A sample is shifted when |mod(x - x0, period) - period/2| < period/8, so both
edges of the central quarter are excluded.
"""

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import masks
from qfourier.field import Grid


@pyplugs.register
def sample(spec: masks.ZernikeQuarter, grid: Grid) -> np.ndarray:
    """Phase δ on the central quarter of each cell, 1 elsewhere"""
    masks.require_resolved(spec.period, grid)
    offset = np.mod(grid.x - spec.x0, spec.period) - spec.period / 2
    inside = np.abs(offset) < spec.period / 8
    return np.where(inside, np.exp(1j * spec.delta), 1.0 + 0j)
