"""Writer for 8-bit portable graymaps

Pixel values are round(255·Γ/Γ_max), one pixel per matrix entry, row by row.
`emit_heatmap` also writes a JSON sidecar recording Γ_max.
"""

# Standard library imports
import io
import logging
import pathlib
from typing import Any, Dict, Union

# Third party imports
import numpy as np
import pyplugs
from PIL import Image

# QFourier imports
from qfourier import _exceptions, writers

log = logging.getLogger(__name__)


def _pixels(matrix: np.ndarray) -> np.ndarray:
    """Scale a non-negative matrix to 8-bit gray levels"""
    gamma_max = matrix.max() if matrix.size else 0.0
    if gamma_max <= 0:
        return np.zeros(matrix.shape, dtype=np.uint8)
    return np.floor(255 * matrix / gamma_max + 0.5).astype(np.uint8)


def _validate(matrix: Any) -> np.ndarray:
    """Raise InvalidArgument unless matrix is a finite non-negative 2-D array"""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2:
        raise _exceptions.InvalidArgument(
            f"A heatmap needs a 2-D matrix, got shape {matrix.shape}"
        )
    if not np.all(np.isfinite(matrix)):
        raise _exceptions.InvalidArgument("A heatmap needs finite entries")
    if np.any(matrix < 0):
        raise _exceptions.InvalidArgument("A heatmap needs non-negative entries")
    return matrix


@pyplugs.register
def as_pgm(data: Any) -> bytes:
    """Use Pillow to write a binary graymap"""
    image = Image.fromarray(_pixels(_validate(data)))
    output = io.BytesIO()
    image.save(output, format="PPM")
    return output.getvalue()


def emit_heatmap(
    matrix: Any, file_path: Union[str, pathlib.Path]
) -> Dict[str, Any]:
    """Write a heatmap and its <name>.pgm.json sidecar, return the metadata"""
    matrix = _validate(matrix)
    file_path = writers.as_file(matrix, file_path, file_format="pgm")

    gamma_max = float(matrix.max()) if matrix.size else 0.0
    metadata = {
        "gamma_max": gamma_max,
        "shape": list(matrix.shape),
        "warning": gamma_max <= 0,
    }
    if metadata["warning"]:
        log.warning("Heatmap %s is all zero, writing a black image", file_path)

    sidecar = file_path.with_name(file_path.name + ".json")
    writers.as_file(metadata, sidecar, file_format="json")
    return metadata
