"""Single-photon linear maps

Every operator acts along one axis of an amplitude array. The same object can
therefore transform a single-photon field, every mode of a Schmidt sum, or
each axis of a dense two-photon amplitude in turn.
"""

# Standard library imports
import abc
from typing import Optional

# Third party imports
import numpy as np

# QFourier imports
from qfourier import _exceptions
from qfourier.field import (
    Field1D,
    Grid,
    OpticsParams,
    conjugate_grid,
    lens_matrix,
    lens_transform,
)


class SinglePhotonOp(abc.ABC):
    """A linear map from fields on grid_in to fields on grid_out"""

    grid_in: Grid
    grid_out: Grid

    @abc.abstractmethod
    def apply(self, amp: np.ndarray, axis: int = -1) -> np.ndarray:
        """Apply the map along one axis of an amplitude array"""

    def __call__(self, field: Field1D) -> Field1D:
        """Apply the map to a single-photon field"""
        self.grid_in.require(field.grid)
        return Field1D(self.grid_out, self.apply(field.amp))


class LensOp(SinglePhotonOp):
    """Fourier transform performed by a lens"""

    def __init__(
        self,
        optics: OpticsParams,
        grid_in: Grid,
        grid_out: Optional[Grid] = None,
        *,
        method: str = "fft",
    ) -> None:
        """Set up a lens between two grids, by default onto the conjugate grid"""
        if method not in ("fft", "quadrature"):
            raise _exceptions.InvalidArgument(f"Unknown lens method {method!r}")

        self.optics = optics
        self.grid_in = grid_in
        if grid_out is None:
            grid_out = conjugate_grid(grid_in, optics)
        self.grid_out = grid_out
        self.method = method
        self._matrix = (
            lens_matrix(self.grid_in, self.grid_out, optics)
            if method == "quadrature"
            else None
        )

    def apply(self, amp: np.ndarray, axis: int = -1) -> np.ndarray:
        """Transform along the given axis"""
        if self._matrix is None:
            return lens_transform(amp, self.grid_in, self.grid_out, self.optics, axis)
        return _matrix_along(self._matrix, amp, axis)

    def __repr__(self) -> str:
        """Short representation of the lens"""
        return f"{self.__class__.__name__}(λf={self.optics.lambda_f}, {self.method})"


class MatrixOp(SinglePhotonOp):
    """An explicit transition matrix U(x_o, x_i)"""

    def __init__(
        self, matrix: np.ndarray, grid_in: Grid, grid_out: Optional[Grid] = None
    ) -> None:
        """Store the matrix, rows index grid_out and columns grid_in"""
        self.grid_in = grid_in
        self.grid_out = grid_in if grid_out is None else grid_out
        self.matrix = np.asarray(matrix, dtype=complex)
        if self.matrix.shape != (self.grid_out.n, self.grid_in.n):
            raise _exceptions.InvalidArgument(
                f"Matrix of shape {self.matrix.shape} does not map "
                f"{self.grid_in.n} samples to {self.grid_out.n}"
            )

    def apply(self, amp: np.ndarray, axis: int = -1) -> np.ndarray:
        """Multiply by the matrix along the given axis"""
        return _matrix_along(self.matrix, amp, axis)


class MaskOp(SinglePhotonOp):
    """Pointwise multiplication by a sampled transmission"""

    def __init__(self, samples: np.ndarray, grid: Grid) -> None:
        """Store the transmission samples"""
        self.samples = np.asarray(samples, dtype=complex)
        if self.samples.shape != (grid.n,):
            raise _exceptions.InvalidArgument(
                f"Mask has shape {self.samples.shape}, grid has {grid.n} samples"
            )
        self.grid_in = self.grid_out = grid

    def apply(self, amp: np.ndarray, axis: int = -1) -> np.ndarray:
        """Multiply pointwise along the given axis"""
        shape = [1] * np.ndim(amp)
        shape[axis] = self.samples.size
        return amp * self.samples.reshape(shape)


class ReflectOp(SinglePhotonOp):
    """Relabel x → -x on a symmetric grid, undoing the 4-f image inversion"""

    def __init__(self, grid: Grid) -> None:
        """Reflection is only exact on symmetric, half-sample centred grids"""
        if not grid.is_symmetric:
            raise _exceptions.InvalidArgument("Reflection needs a symmetric grid")
        self.grid_in = self.grid_out = grid

    def apply(self, amp: np.ndarray, axis: int = -1) -> np.ndarray:
        """Reverse the order of samples along the given axis"""
        return np.flip(amp, axis=axis)


def _matrix_along(matrix: np.ndarray, amp: np.ndarray, axis: int) -> np.ndarray:
    """Contract the columns of matrix with one axis of amp, keeping axis order"""
    moved = np.moveaxis(np.asarray(amp, dtype=complex), axis, 0)
    result = np.tensordot(matrix, moved, axes=(1, 0))
    return np.moveaxis(result, 0, axis)
