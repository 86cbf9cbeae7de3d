"""Exchange filtering with a narrow Fourier-plane aperture

A small aperture at the centre of the Fourier plane keeps only the part of a
pair that is even under exchange. Boson pairs pass with a finite share, the
transmission of fermion pairs vanishes as the aperture closes.
"""

# Standard library imports
import logging
from typing import Tuple

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import masks
from qfourier.biphoton import build_boson_pair, build_fermion_pair
from qfourier.fourf import fourier_transmission
from qfourier.scenarios import ScenarioConfig, ScenarioResult
from qfourier.writers import Table

log = logging.getLogger(__name__)


@pyplugs.register
def run(config: ScenarioConfig) -> ScenarioResult:
    """Transmitted norm² of boson and fermion pairs per aperture width"""
    site_a, site_b = config.sites
    mode_a, mode_b = config.mode(site_a), config.mode(site_b)
    bosons = build_boson_pair(mode_a, mode_b)
    fermions = build_fermion_pair(mode_a, mode_b)

    def transmission(fraction: float) -> Tuple[float, float, float]:
        """Aperture width and transmitted norm² of both pairs"""
        width = fraction * config.setup.mask_period
        aperture = masks.Aperture(center=0.0, width=width)
        return (
            width,
            fourier_transmission(bosons, aperture, config.optics),
            fourier_transmission(fermions, aperture, config.optics),
        )

    fractions = list(config.aperture_fractions)
    rows = config.map(transmission, fractions)
    ratios = [fermion / boson if boson > 0 else 0.0 for _, boson, fermion in rows]
    for width, boson, fermion in rows:
        log.info("Aperture %.5f mm: boson %.4g, fermion %.4g", width, boson, fermion)

    order = np.argsort(fractions)[::-1]
    fermion_by_width = [rows[i][2] for i in order]
    metrics = {
        "aperture_fractions": fractions,
        "widths": [r[0] for r in rows],
        "boson_transmission": [r[1] for r in rows],
        "fermion_transmission": [r[2] for r in rows],
        "fermion_boson_ratio": ratios,
        "fermion_monotone": all(
            b < a for a, b in zip(fermion_by_width, fermion_by_width[1:])
        ),
        "narrowest_ratio": ratios[int(order[-1])],
    }

    table = Table(
        values=np.column_stack([np.array(rows), ratios]),
        columns=["width", "boson", "fermion", "ratio"],
        rows=fractions,
        corner="fraction",
    )
    return ScenarioResult(tables={"aperture": table}, metrics=metrics)
