"""Single-beam and two-beam walks for a list of grating amplitudes

One photon entering at the first input site spreads over the lattice with
probabilities J_t(A_p)². The two-beam run sends the path-entangled state
through the same grating and records the photon number per site.
"""

# Standard library imports
import logging
from typing import List

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import lattice
from qfourier.fourf import binned_intensity, run_4f_biphoton, run_4f_single
from qfourier.scenarios import ScenarioConfig, ScenarioResult
from qfourier.writers import Table

log = logging.getLogger(__name__)


@pyplugs.register
def run(config: ScenarioConfig) -> ScenarioResult:
    """Binned output intensities per amplitude, engine and lattice oracle"""
    setup, detectors = config.setup, config.detectors()
    site_a, site_b = config.sites
    sites = np.array(setup.sites)
    reach = setup.n_max + max(abs(site_a), abs(site_b))

    def single_beam(amplitude: float) -> np.ndarray:
        """Photon probability per site for one beam"""
        output = run_4f_single(
            config.mode(site_a), config.sinusoidal_mask(amplitude), config.optics
        )
        return binned_intensity(output, detectors)

    def two_beam(amplitude: float) -> np.ndarray:
        """Photon number per site for the path-entangled state"""
        state = config.path_entangled(config.phase)
        mask = config.sinusoidal_mask(amplitude)
        output = run_4f_biphoton(state, mask, config.optics)
        return binned_intensity(output, detectors)

    def single_oracle(amplitude: float) -> np.ndarray:
        """J_(q-a)(A_p)² per site"""
        coefficients = lattice.walk_coefficients(amplitude, reach)
        return np.abs(coefficients.at(sites - site_a)) ** 2

    def two_oracle(amplitude: float) -> np.ndarray:
        """Marginal of the lattice correlation map"""
        gamma = lattice.oracle_correlation(
            config.phase,
            amplitude,
            site_a,
            site_b,
            setup.n_max,
            origin_phase=config.origin_phase,
        )
        return lattice.lattice_marginal(gamma)

    amplitudes = list(config.amplitudes)
    singles = config.map(single_beam, amplitudes)
    doubles = config.map(two_beam, amplitudes)
    single_ref = [single_oracle(a) for a in amplitudes]
    double_ref = [two_oracle(a) for a in amplitudes]

    participation = [lattice.participation_number(p) for p in singles]
    metrics = {
        "amplitudes": amplitudes,
        "participation_number": participation,
        "participation_number_oracle": [
            lattice.participation_number(p) for p in single_ref
        ],
        "participation_monotone": _is_increasing(participation),
        "single_beam_max_relative_deviation": [
            lattice.max_relative_deviation(e, o) for e, o in zip(singles, single_ref)
        ],
        "two_beam_max_relative_deviation": [
            lattice.max_relative_deviation(2 * e / e.sum(), o)
            for e, o in zip(doubles, double_ref)
        ],
    }
    log.info("Participation numbers %s", ", ".join(f"{p:.3f}" for p in participation))

    def table(rows: List[np.ndarray]) -> Table:
        """Rows per amplitude, columns per site"""
        return Table(np.array(rows), list(sites), amplitudes, corner="A_p\\q")

    return ScenarioResult(
        tables={
            "single_beam": table(singles),
            "single_beam_oracle": table(single_ref),
            "two_beam": table(doubles),
            "two_beam_oracle": table(double_ref),
        },
        heatmaps={"single_beam": np.array(singles), "two_beam": np.array(doubles)},
        metrics=metrics,
    )


def _is_increasing(values: List[float]) -> bool:
    """True if every value is larger than the one before"""
    return all(b > a for a, b in zip(values, values[1:]))
