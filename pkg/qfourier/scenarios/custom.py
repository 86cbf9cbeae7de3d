"""Correlation maps behind a tabulated Fourier-plane mask

The tabulated mask is read from `custom_mask` and multiplied onto the
sinusoidal grating, which is the identity for amplitude = 0.
"""

# Standard library imports
import logging
from typing import Tuple

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import _exceptions, lattice, masks
from qfourier.biphoton import binned_marginal, correlation_map
from qfourier.fourf import run_4f_biphoton
from qfourier.scenarios import ScenarioConfig, ScenarioResult, lattice_table
from qfourier.writers import Table

log = logging.getLogger(__name__)


@pyplugs.register
def run(config: ScenarioConfig) -> ScenarioResult:
    """Γ and binned marginal per phase"""
    setup, detectors = config.setup, config.detectors()
    try:
        custom = masks.load_custom_mask(config.custom_mask, setup.fourier_grid)
    except OSError as err:
        source = config.configuration.get_source("custom_mask")
        raise _exceptions.ConfigError(
            f"{source}: could not read {config.custom_mask}: {err.strerror}"
        ) from None
    except _exceptions.InvalidArgument as err:
        source = config.configuration.get_source("custom_mask")
        raise _exceptions.ConfigError(f"{source}: {err}") from None
    mask = masks.Composite((config.sinusoidal_mask(config.amplitude), custom))
    log.info("Loaded custom mask from %s", config.custom_mask)

    def engine(phi: float) -> Tuple[np.ndarray, np.ndarray]:
        """Normalized Γ and binned marginal for one phase"""
        state = run_4f_biphoton(config.path_entangled(phi), mask, config.optics)
        gamma = correlation_map(state, detectors).normalized()
        return gamma, binned_marginal(state, detectors)

    phases = list(config.phases)
    results = config.map(engine, phases)

    result = ScenarioResult()
    for idx, (gamma, _) in enumerate(results):
        result.tables[f"gamma_phi{idx}"] = lattice_table(gamma, setup.sites)
        result.heatmaps[f"gamma_phi{idx}"] = gamma
    result.tables["marginal"] = Table(
        values=np.array([marginal for _, marginal in results]),
        columns=list(setup.sites),
        rows=phases,
        corner="phi\\q",
    )

    result.metrics = {
        "amplitude": config.amplitude,
        "is_phase_only": mask.is_phase_only,
        "phases": [
            {
                "phi": phi,
                "diagonal_fraction": lattice.diagonal_fraction(gamma),
                "detected_photons": float(marginal.sum()),
            }
            for phi, (gamma, marginal) in zip(phases, results)
        ],
        "phase_pairs": [
            {
                "phi": phases[i],
                "distinguishability": lattice.distinguishability(
                    results[i][0], results[j][0]
                ),
            }
            for i, j in config.phase_pairs()
        ],
    }
    return result
