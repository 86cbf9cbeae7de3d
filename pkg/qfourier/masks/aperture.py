"""Binary aperture"""

# Standard library imports
import logging

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import masks
from qfourier.field import Grid

log = logging.getLogger(__name__)


@pyplugs.register
def sample(spec: masks.Aperture, grid: Grid) -> np.ndarray:
    """Indicator of the closed interval [center - width/2, center + width/2]"""
    inside = np.abs(grid.x - spec.center) <= spec.width / 2
    if not np.any(inside):
        log.warning(
            "Aperture of width %g at %g blocks every sample", spec.width, spec.center
        )
    return inside.astype(complex)
