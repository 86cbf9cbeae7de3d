"""Test single-photon operators"""

# Third party imports
import numpy as np
import pytest

# QFourier imports
from qfourier import _exceptions
from qfourier.field import conjugate_grid, gaussian_mode, make_grid
from qfourier.ops import LensOp, MaskOp, MatrixOp, ReflectOp


def test_lens_op_defaults_to_conjugate_grid(grid, optics):
    """Test that a lens without output grid maps onto the conjugate grid"""
    lens = LensOp(optics, grid)
    assert lens.grid_out.matches(conjugate_grid(grid, optics))


def test_lens_op_methods_agree_along_axes(grid, optics):
    """Test that FFT and quadrature lenses agree along both axes"""
    rng = np.random.default_rng(2021)
    amp = rng.normal(size=(grid.n, 3)) + 1j * rng.normal(size=(grid.n, 3))

    fft = LensOp(optics, grid)
    quadrature = LensOp(optics, grid, method="quadrature")
    assert np.allclose(fft.apply(amp, axis=0), quadrature.apply(amp, axis=0))
    assert np.allclose(fft.apply(amp.T, axis=1), quadrature.apply(amp.T, axis=1))


def test_lens_op_unknown_method(grid, optics):
    """Test that an unknown lens method is rejected"""
    with pytest.raises(_exceptions.InvalidArgument, match="method"):
        LensOp(optics, grid, method="fresnel")


def test_op_checks_input_grid(grid, optics):
    """Test that an operator refuses fields on other grids"""
    field = gaussian_mode(make_grid(256, 2.0), 0, 0.2)
    with pytest.raises(_exceptions.InvalidArgument):
        LensOp(optics, grid)(field)


def test_matrix_op(grid):
    """Test that a matrix operator multiplies along the chosen axis"""
    matrix = np.diag(np.arange(grid.n, dtype=float))
    op = MatrixOp(matrix, grid)
    amp = np.ones((2, grid.n))

    assert np.array_equal(op.apply(amp, axis=1)[1], np.arange(grid.n))


def test_matrix_op_shape(grid):
    """Test that the matrix shape must match the grids"""
    with pytest.raises(_exceptions.InvalidArgument):
        MatrixOp(np.eye(grid.n - 1), grid)


def test_mask_op_broadcasts(grid):
    """Test that a mask multiplies along one axis of a 2-D array"""
    samples = np.exp(1j * grid.x)
    op = MaskOp(samples, grid)
    amp = np.ones((grid.n, grid.n))

    assert np.allclose(op.apply(amp, axis=0)[:, 5], samples)
    assert np.allclose(op.apply(amp, axis=1)[5, :], samples)


def test_mask_op_shape(grid):
    """Test that the mask must have one sample per grid point"""
    with pytest.raises(_exceptions.InvalidArgument):
        MaskOp(np.ones(3), grid)


def test_reflect_op(grid):
    """Test that reflection reverses the samples"""
    mode = gaussian_mode(grid, 1.0, 0.3)
    reflected = ReflectOp(grid)(mode)
    assert grid.x[np.argmax(reflected.intensity)] == pytest.approx(-1, abs=grid.dx)
