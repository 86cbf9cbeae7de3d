"""Correlation maps of the path-entangled state behind the sinusoidal grating

For every phase φ the binned coincidence map of the continuous engine is
compared with the lattice oracle.
"""

# Standard library imports
import logging
from typing import Tuple

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import lattice
from qfourier.biphoton import correlation_map
from qfourier.fourf import run_4f_biphoton
from qfourier.scenarios import ScenarioConfig, ScenarioResult, lattice_table

log = logging.getLogger(__name__)


@pyplugs.register
def run(config: ScenarioConfig) -> ScenarioResult:
    """Γ per phase, with the oracle Γ and their deviation"""
    setup, detectors = config.setup, config.detectors()
    site_a, site_b = config.sites
    mask = config.sinusoidal_mask(config.amplitude)

    def engine(phi: float) -> Tuple[np.ndarray, float]:
        """Normalized Γ and the probability that both photons are detected"""
        state = run_4f_biphoton(config.path_entangled(phi), mask, config.optics)
        gamma = correlation_map(state, detectors)
        return gamma.normalized(), gamma.total

    phases = list(config.phases)
    results = config.map(engine, phases)
    oracles = [
        lattice.oracle_correlation(
            phi,
            config.amplitude,
            site_a,
            site_b,
            setup.n_max,
            origin_phase=config.origin_phase,
        )
        for phi in phases
    ]

    result = ScenarioResult()
    per_phase = []
    for idx, (phi, (gamma, total), oracle) in enumerate(zip(phases, results, oracles)):
        deviation = lattice.max_relative_deviation(gamma, oracle)
        per_phase.append(
            {
                "phi": phi,
                "detected": total,
                "diagonal_fraction": lattice.diagonal_fraction(gamma),
                "diagonal_fraction_oracle": lattice.diagonal_fraction(oracle),
                "max_relative_deviation": deviation,
            }
        )
        result.tables[f"gamma_phi{idx}"] = lattice_table(gamma, setup.sites)
        result.tables[f"oracle_phi{idx}"] = lattice_table(oracle, setup.sites)
        result.heatmaps[f"gamma_phi{idx}"] = gamma
        log.info("φ = %.4f: max relative deviation %.3g", phi, deviation)

    result.metrics = {
        "amplitude": config.amplitude,
        "phases": per_phase,
        "max_relative_deviation": max(p["max_relative_deviation"] for p in per_phase),
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
