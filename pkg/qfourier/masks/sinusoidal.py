"""Sinusoidal phase grating"""

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import masks
from qfourier.field import Grid


@pyplugs.register
def sample(spec: masks.Sinusoidal, grid: Grid) -> np.ndarray:
    """M_k = exp(i A_p cos(2πν(x_k - x0)))"""
    masks.require_resolved(spec.period, grid)
    theta = 2 * np.pi * spec.nu * (grid.x - spec.x0)
    return np.exp(1j * spec.amplitude * np.cos(theta))
