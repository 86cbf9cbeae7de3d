"""Config-driven scenarios reproducing the lattice experiments

Each scenario kind is a plugin in this package with a `run` function that
computes tables, heatmaps and metrics from a `ScenarioConfig`. Writing the
artifacts is shared by all scenarios and done by `run_scenario`.
"""

# Standard library imports
import logging
import pathlib
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple

# Third party imports
import numpy as np
import pyplugs

# QFourier imports
from qfourier import writers
from qfourier.scenarios._config import (  # noqa
    ScenarioConfig,
    load_config,
    read_configuration,
)
from qfourier.writers import Table
from qfourier.writers.pgm import emit_heatmap

log = logging.getLogger(__name__)

names = pyplugs.names_factory(__package__)
_run = pyplugs.call_factory(__package__)

SUMMARY_FILE = "summary.json"
CONFIG_ECHO_FILE = "config.cfg"


@dataclass
class ScenarioResult:
    """Tables, heatmaps and metrics computed by a scenario"""

    tables: Dict[str, Table] = field(default_factory=dict)
    heatmaps: Dict[str, np.ndarray] = field(default_factory=dict)
    metrics: Dict[str, Any] = field(default_factory=dict)


class ArtifactSet(NamedTuple):
    """Files written by one scenario run"""

    output_dir: pathlib.Path
    files: List[pathlib.Path]
    metrics: Dict[str, Any]


def run_scenario(config: ScenarioConfig) -> ArtifactSet:
    """Run a scenario and write its artifacts to the output directory"""
    log.info("Running scenario %r", config.kind)
    result: ScenarioResult = _run(config.kind, func="run", config=config)

    out = config.output_dir
    files = [writers.as_file(config.configuration, out / CONFIG_ECHO_FILE, "flat")]
    for name, table in result.tables.items():
        if "csv" in config.emit:
            files.append(writers.as_file(table, out / f"{name}.csv"))
        if "json" in config.emit:
            files.append(writers.as_file(_table_dict(table), out / f"{name}.json"))

    heatmaps = {}
    if "pgm" in config.emit:
        for name, matrix in result.heatmaps.items():
            heatmaps[name] = emit_heatmap(matrix, out / f"{name}.pgm")
            files.extend([out / f"{name}.pgm", out / f"{name}.pgm.json"])

    if "json" in config.emit:
        summary = {
            "scenario": config.kind,
            "config": config.configuration.as_flat(),
            "metrics": result.metrics,
            "heatmaps": heatmaps,
            "files": sorted(p.name for p in files),
        }
        files.append(writers.as_file(summary, out / SUMMARY_FILE))

    log.info("Wrote %d files to %s", len(files), out)
    return ArtifactSet(output_dir=out, files=files, metrics=result.metrics)


def _table_dict(table: Table) -> Dict[str, Any]:
    """JSON representation of a table"""
    return {
        "columns": list(table.columns),
        "rows": list(table.rows),
        "corner": table.corner,
        "values": np.asarray(table.values),
    }


def lattice_table(matrix: np.ndarray, sites: Any) -> Table:
    """Correlation matrix labelled with detector sites q and r"""
    return Table(values=matrix, columns=list(sites), rows=list(sites), corner="q\\r")
