"""Common fixtures for all tests"""

# Standard library imports
import math
import pathlib

# Third party imports
import pytest

# QFourier imports
from qfourier import Configuration
from qfourier.field import OpticsParams, make_grid
from qfourier.fourf import LatticeSetup

PITCH = 0.5


@pytest.fixture
def sample_dir():
    """Directory that contains sample files"""
    return pathlib.Path(__file__).parent / "files"


@pytest.fixture
def optics():
    """Default optics, λ = 808 nm and f = 100 mm"""
    return OpticsParams(wavelength=808e-6, focal_length=100)


@pytest.fixture
def grid():
    """A small symmetric grid"""
    return make_grid(256, 4.0)


@pytest.fixture
def setup(optics):
    """The default lattice, 4096 samples with 64 per site"""
    return LatticeSetup(optics=optics, pitch=PITCH)


@pytest.fixture
def small_setup(optics):
    """A small lattice, 512 samples with 32 per site"""
    return LatticeSetup(optics=optics, pitch=PITCH, samples_per_site=32, n=512, n_max=6)


@pytest.fixture
def strong_amplitude():
    """The grating amplitude of the correlation experiments"""
    return 0.86 * math.pi


@pytest.fixture
def cfg():
    """A basic configuration for testing"""
    return Configuration.from_str(
        "\n".join(
            [
                "# Basic configuration",
                "scenario = correlation_map",
                "wavelength = 808e-6",
                "amplitude = 0.86pi",
                "phases = 0, pi/2, -pi/2",
                "n = 4096",
                "verbose = yes",
                "output_dir = ~/qfourier",
            ]
        ),
        name="test_config",
        source="test.cfg",
    )
