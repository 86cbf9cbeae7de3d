"""Plugins for writing scenario artifacts

Every writer turns data into the text (or bytes) of one file format. The
format of a file is deduced from its suffix unless given explicitly.
"""

# Standard library imports
import pathlib
from typing import Any, NamedTuple, Optional, Sequence, Union

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import formats

names = pyplugs.names_factory(__package__)
as_str = pyplugs.call_factory(__package__)


class Table(NamedTuple):
    """A matrix with labelled rows and columns"""

    values: np.ndarray
    columns: Sequence[Any]
    rows: Sequence[Any] = ()
    corner: str = ""


def as_file(
    data: Any,
    file_path: Union[str, pathlib.Path],
    file_format: Optional[str] = None,
    encoding: str = "utf-8",
    **writer_args: Any,
) -> pathlib.Path:
    """Write data to file with the given format

    If the file format is not specified, it is deduced from the file path suffix.
    """
    file_path = pathlib.Path(file_path)
    file_format = (
        formats.guess_format(file_path) if file_format is None else file_format
    )
    formats.require(file_format, names())

    file_path.parent.mkdir(parents=True, exist_ok=True)
    content = as_str(file_format, data=data, **writer_args)
    if isinstance(content, bytes):
        file_path.write_bytes(content)
    else:
        with open(file_path, mode="w", encoding=encoding, newline="\n") as fid:
            fid.write(content)
    return file_path
