"""Writer for CSV-files

Tables get a header row of column labels and, when rows are labelled, a
first column of row labels. Floats are written as %.12e.
"""

# Standard library imports
import csv
import io
from typing import Any, List

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier.writers import Table


def _format(value: Any) -> str:
    """Format one cell"""
    if isinstance(value, (float, np.floating)):
        return f"{value:.12e}"
    return str(value)


@pyplugs.register
def as_csv(data: Table) -> str:
    """Use csv standard library to write a labelled table"""
    values = np.atleast_2d(np.asarray(data.values))
    labelled = len(data.rows) > 0

    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    header: List[Any] = [data.corner] if labelled else []
    writer.writerow([_format(c) for c in header + list(data.columns)])
    for idx, row in enumerate(values):
        cells = ([data.rows[idx]] if labelled else []) + list(row)
        writer.writerow([_format(c) for c in cells])
    return output.getvalue()
