"""Test grids, fields and the lens transform"""

# Standard library imports
import math

# Third party imports
import numpy as np
import pytest

# QFourier imports
from qfourier import _exceptions
from qfourier.field import (
    Field1D,
    Grid,
    OpticsParams,
    check_reciprocity,
    conjugate_grid,
    gaussian_mode,
    lens_fourier,
    lens_fourier_quadrature,
    make_grid,
)


def test_grid_is_half_sample_centred(grid):
    """Test that a symmetric grid mirrors exactly and avoids the origin"""
    x = grid.x
    assert np.array_equal(x[::-1], -x)
    assert not np.any(x == 0)
    assert grid.dx == pytest.approx(1 / 32)


def test_grid_index_of(grid):
    """Test that positions are mapped to the sample containing them"""
    assert grid.index_of(0.001) == grid.n // 2
    assert grid.index_of(-0.001) == grid.n // 2 - 1
    assert grid.index_of(100) == grid.n - 1


@pytest.mark.parametrize("n, x_min, x_max", [(1, -1, 1), (8, 1, 1), (8, 2, -2)])
def test_invalid_grid(n, x_min, x_max):
    """Test that degenerate grids are rejected"""
    with pytest.raises(_exceptions.InvalidArgument):
        Grid(n=n, x_min=x_min, x_max=x_max)


def test_invalid_optics():
    """Test that non-positive wavelengths are rejected"""
    with pytest.raises(_exceptions.InvalidArgument):
        OpticsParams(wavelength=-808e-6, focal_length=100)


def test_conjugate_grid_reciprocity(grid, optics):
    """Test that the conjugate grid satisfies dx_in dx_out n = λf"""
    fourier_grid = conjugate_grid(grid, optics)
    assert grid.dx * fourier_grid.dx * grid.n == pytest.approx(optics.lambda_f)
    check_reciprocity(grid, fourier_grid, optics)


def test_check_reciprocity_fails(grid, optics):
    """Test that grids violating reciprocity raise SamplingError"""
    with pytest.raises(_exceptions.SamplingError, match="conjugate_grid"):
        check_reciprocity(grid, grid, optics)


def test_check_reciprocity_needs_equal_size(grid, optics):
    """Test that lens grids must have the same number of samples"""
    with pytest.raises(_exceptions.SamplingError):
        check_reciprocity(grid, make_grid(128, 1.0), optics)


def test_gaussian_mode_is_normalized(grid):
    """Test that Gaussian modes have unit norm"""
    mode = gaussian_mode(grid, 0.5, 0.25)
    assert mode.is_normalized
    assert grid.x[np.argmax(mode.intensity)] == pytest.approx(0.5, abs=grid.dx)


def test_gaussian_mode_unresolved(grid):
    """Test that a waist below four samples is rejected"""
    with pytest.raises(_exceptions.ResolutionError, match="not resolved"):
        gaussian_mode(grid, 0, 2 * grid.dx)


def test_gaussian_mode_truncated(grid):
    """Test that a mode spilling over the grid edge is rejected"""
    with pytest.raises(_exceptions.ResolutionError, match="truncated"):
        gaussian_mode(grid, 3.9, 0.5)


def test_lens_is_unitary(grid, optics):
    """Test that the lens preserves the norm"""
    mode = gaussian_mode(grid, 0.3, 0.4)
    spectrum = lens_fourier(mode, optics, conjugate_grid(grid, optics))
    assert spectrum.norm2 == pytest.approx(1, abs=1e-12)


def test_lens_fft_matches_quadrature(grid, optics):
    """Test that the FFT lens equals the direct quadrature sum"""
    mode = gaussian_mode(grid, -0.7, 0.3) * np.exp(2j * grid.x)
    fourier_grid = conjugate_grid(grid, optics)

    fft = lens_fourier(mode, optics, fourier_grid)
    quadrature = lens_fourier_quadrature(mode, optics, fourier_grid)
    assert np.allclose(fft.amp, quadrature.amp, atol=1e-10)


def test_lens_maps_gaussian_to_gaussian(grid, optics):
    """Test that a centred Gaussian of waist w becomes one of waist λf / πw"""
    waist = 0.5
    fourier_grid = conjugate_grid(grid, optics)
    spectrum = lens_fourier(gaussian_mode(grid, 0, waist), optics, fourier_grid)
    expected = gaussian_mode(fourier_grid, 0, optics.lambda_f / (math.pi * waist))

    assert np.allclose(spectrum.amp, expected.amp, atol=1e-8)


def test_two_lenses_reflect(grid, optics):
    """Test that two lenses in sequence give the inverted image"""
    mode = gaussian_mode(grid, 0.8, 0.3) * np.exp(1j * grid.x)
    fourier_grid = conjugate_grid(grid, optics)
    image = lens_fourier(lens_fourier(mode, optics, fourier_grid), optics, grid)

    assert np.allclose(image.amp, mode.reflected().amp, atol=1e-12)


def test_field_inner_and_add(grid):
    """Test superposition and inner products of fields"""
    left = gaussian_mode(grid, -1, 0.25)
    right = gaussian_mode(grid, 1, 0.25)

    assert abs(left.inner(right)) < 1e-12
    assert (left + right).norm2 == pytest.approx(2)
    assert (1j * left).inner(left) == pytest.approx(-1j)


def test_field_wrong_shape(grid):
    """Test that the amplitude must match the grid"""
    with pytest.raises(_exceptions.InvalidArgument):
        Field1D(grid, np.zeros(grid.n + 1))


def test_field_is_immutable(grid):
    """Test that field amplitudes can not be changed in place"""
    field = gaussian_mode(grid, 0, 0.5)
    with pytest.raises(ValueError):
        field.amp[0] = 1


def test_normalize_zero_field(grid):
    """Test that a zero field can not be normalized"""
    with pytest.raises(_exceptions.InvalidArgument):
        Field1D(grid, np.zeros(grid.n)).normalized()


def test_reflect_needs_symmetric_grid():
    """Test that reflection is only defined on symmetric grids"""
    field = Field1D(Grid(n=4, x_min=0, x_max=1), np.ones(4))
    with pytest.raises(_exceptions.InvalidArgument):
        field.reflected()


@pytest.mark.parametrize("n", [4.5, "256", None])
def test_make_grid_needs_integer_count(n):
    """Test that a non-integral sample count is rejected, not truncated"""
    with pytest.raises(_exceptions.InvalidArgument, match="integer"):
        make_grid(n, 2.0)


def test_make_grid_accepts_numpy_integer():
    """Test that numpy integers are valid sample counts"""
    assert make_grid(np.int64(64), 2.0).n == 64


def test_lens_is_linear(grid, optics):
    """Test that the lens transform of a superposition is the superposition"""
    first = gaussian_mode(grid, -0.9, 0.3)
    second = gaussian_mode(grid, 1.2, 0.4) * np.exp(-3j * grid.x)
    fourier_grid = conjugate_grid(grid, optics)

    combined = lens_fourier((0.6 - 0.2j) * first + 1.5 * second, optics, fourier_grid)
    separate = (0.6 - 0.2j) * lens_fourier(
        first, optics, fourier_grid
    ) + 1.5 * lens_fourier(second, optics, fourier_grid)
    assert np.allclose(combined.amp, separate.amp, atol=1e-12)
