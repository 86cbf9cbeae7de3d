"""The simulate command

    simulate <config-path> [--out DIR] [--emit csv,json,pgm] [--seedless] [-v|-q]

Exit codes are 0 on success, 2 for configuration errors and 3 when a
numerical model can not be evaluated.
"""

# Standard library imports
import argparse
import logging
import pathlib
import sys
from typing import List, Optional

# QFourier imports
import qfourier
from qfourier import _exceptions, scenarios

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_MODEL_ERROR = 3


def _parser() -> argparse.ArgumentParser:
    """Command line arguments"""
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Run a 4-f Fourier processing scenario",
    )
    parser.add_argument("config", type=pathlib.Path, help="scenario configuration")
    parser.add_argument("--out", type=str, help="output directory")
    parser.add_argument("--emit", type=str, help="artifact formats, e.g. csv,json,pgm")
    parser.add_argument(
        "--seedless",
        action="store_true",
        help="accepted for compatibility, runs never use random numbers",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug output")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="only errors")
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {qfourier.__version__}"
    )
    return parser


def _setup_logging(verbose: bool, quiet: bool) -> None:
    """Log to stderr without timestamps"""
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.INFO
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run the scenario given on the command line, return the exit code"""
    args = _parser().parse_args(argv)
    _setup_logging(args.verbose, args.quiet)

    try:
        cfg = scenarios.read_configuration(args.config)
        if args.out is not None:
            cfg.update_entry("output_dir", args.out, source="--out (command line)")
        if args.emit is not None:
            cfg.update_entry("emit", args.emit, source="--emit (command line)")
        config = scenarios.ScenarioConfig.from_configuration(
            cfg, base_dir=args.config.parent
        )
        artifacts = scenarios.run_scenario(config)
    except _exceptions.ConfigError as err:
        log.error("%s", err)
        return EXIT_CONFIG_ERROR
    except _exceptions.ModelError as err:
        log.error("%s", err)
        return EXIT_MODEL_ERROR
    except OSError as err:
        log.error("Could not write artifacts: %s", err)
        return EXIT_CONFIG_ERROR

    log.info("Artifacts in %s", artifacts.output_dir)
    return EXIT_OK
