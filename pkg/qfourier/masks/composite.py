"""Products of masks"""

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import masks
from qfourier.field import Grid


@pyplugs.register
def sample(spec: masks.Composite, grid: Grid) -> np.ndarray:
    """Pointwise product of the member samplings"""
    samples = np.ones(grid.n, dtype=complex)
    for member in spec.members:
        samples = samples * masks.sample_mask(member, grid)
    return samples
