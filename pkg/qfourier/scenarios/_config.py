"""Scenario configurations

A scenario configuration is the packaged defaults, updated by the user's
configuration file, updated by command line options. Every value is
validated here so that errors point at the line that set it.
"""

# Standard library imports
import concurrent.futures
import logging
import math
import pathlib
import warnings
from dataclasses import dataclass
from typing import (
    Any,
    Callable,
    Iterable,
    List,
    NoReturn,
    Optional,
    Tuple,
    TypeVar,
    Union,
)

# Third party imports
import pyplugs

# QFourier imports
from qfourier import _exceptions, defaults, masks
from qfourier._converters import convert_to
from qfourier.biphoton import BiphotonState, DetectorArray, build_path_entangled
from qfourier.configuration import Configuration
from qfourier.field import Field1D, OpticsParams, gaussian_mode
from qfourier.fourf import LatticeSetup

log = logging.getLogger(__name__)

_scenario_names = pyplugs.names_factory("qfourier.scenarios")

T = TypeVar("T")
R = TypeVar("R")

EMIT_FORMATS = ("csv", "json", "pgm")

# Entries that have no packaged default
OPTIONAL_KEYS = {"scenario", "waist", "half_width", "custom_mask"}


@dataclass(frozen=True)
class ScenarioConfig:
    """A validated scenario configuration"""

    kind: str
    setup: LatticeSetup
    waist: float
    half_width: float
    mask_origin: float
    sites: Tuple[int, int]
    amplitude: float
    amplitudes: Tuple[float, ...]
    phase: float
    phases: Tuple[float, ...]
    zernike_delta: float
    quadrature_points: int
    aperture_fractions: Tuple[float, ...]
    custom_mask: Optional[pathlib.Path]
    output_dir: pathlib.Path
    emit: Tuple[str, ...]
    workers: int
    configuration: Configuration

    @classmethod
    def from_configuration(
        cls, cfg: Configuration, base_dir: Optional[pathlib.Path] = None
    ) -> "ScenarioConfig":
        """Validate a configuration, paths are relative to base_dir"""
        _check_keys(cfg)
        base_dir = pathlib.Path(".") if base_dir is None else base_dir

        kind = cfg.to_str("scenario")
        if kind not in _scenario_names():
            kinds = ", ".join(sorted(_scenario_names()))
            _fail(cfg, "scenario", f"use one of {kinds}")
        if cfg.to_int("defaults_version") != defaults.DEFAULTS_VERSION:
            _fail(cfg, "defaults_version", f"expected {defaults.DEFAULTS_VERSION}")

        pitch = _positive(cfg, "pitch")
        optics = OpticsParams(
            wavelength=_positive(cfg, "wavelength"),
            focal_length=_positive(cfg, "focal_length"),
        )
        try:
            setup = LatticeSetup(
                optics=optics,
                pitch=pitch,
                samples_per_site=_positive(cfg, "samples_per_site", "int"),
                n=_positive(cfg, "n", "int"),
                n_max=_positive(cfg, "n_max", "int"),
            )
        except _exceptions.ModelError as err:
            _fail(cfg, "n", str(err))

        waist = _positive(cfg, "waist") if "waist" in cfg else pitch / 8
        half_width = _positive(cfg, "half_width") if "half_width" in cfg else pitch / 4
        if half_width > pitch / 2:
            _fail(cfg, "half_width", f"detector bins overlap at pitch {pitch}")

        sites = cfg.to_list("sites")
        if len(sites) != 2:
            _fail(cfg, "sites", "give exactly two input sites")
        site_a, site_b = (_converted(cfg, "sites", "int", s) for s in sites)
        if site_a == site_b or max(abs(site_a), abs(site_b)) > setup.n_max:
            _fail(cfg, "sites", f"need two different sites within ±{setup.n_max}")

        phases = tuple(_phase(cfg, "phases", p) for p in cfg.to_angle_list("phases"))
        if kind == "zernike_retrieval" and not _phase_pairs(phases):
            _fail(cfg, "phases", "need at least one pair of phases ±φ")

        for key in ("amplitudes", "phases", "aperture_fractions"):
            if not cfg.to_list(key):
                _fail(cfg, key, "give at least one value")

        emit = tuple(e.lower() for e in cfg.to_list("emit"))
        unknown = sorted(set(emit) - set(EMIT_FORMATS))
        if unknown:
            _fail(cfg, "emit", f"unknown format {unknown[0]!r}")

        custom_mask = None
        if "custom_mask" in cfg:
            custom_mask = base_dir / cfg.to_path("custom_mask")
            if kind != "custom":
                warnings.warn(
                    RuntimeWarning(
                        f"{cfg.get_source('custom_mask')}: custom_mask is not "
                        f"used by scenario {kind!r}"
                    ),
                    stacklevel=2,
                )
        elif kind == "custom":
            raise _exceptions.EntryError(
                f"{cfg.name}: scenario 'custom' needs a custom_mask entry"
            )

        return cls(
            kind=kind,
            setup=setup,
            waist=waist,
            half_width=half_width,
            mask_origin=cfg.to_float("mask_origin"),
            sites=(site_a, site_b),
            amplitude=_non_negative(cfg, "amplitude", cfg.to_angle("amplitude")),
            amplitudes=tuple(
                _non_negative(cfg, "amplitudes", a)
                for a in cfg.to_angle_list("amplitudes")
            ),
            phase=_phase(cfg, "phase", cfg.to_angle("phase")),
            phases=phases,
            zernike_delta=cfg.to_angle("zernike_delta"),
            quadrature_points=_positive(cfg, "quadrature_points", "int"),
            aperture_fractions=tuple(
                _positive_item(cfg, "aperture_fractions", f)
                for f in cfg.to_float_list("aperture_fractions")
            ),
            custom_mask=custom_mask,
            output_dir=cfg.to_path("output_dir"),
            emit=emit,
            workers=_positive(cfg, "workers", "int"),
            configuration=cfg,
        )

    #
    # Helpers used by the scenario plugins
    #
    @property
    def optics(self) -> OpticsParams:
        """Wavelength and focal length"""
        return self.setup.optics

    @property
    def origin_phase(self) -> float:
        """Phase offset θ0 = 2πν·x0 of the masks relative to the lattice"""
        return 2 * math.pi * self.setup.nu * self.mask_origin

    def detectors(self) -> DetectorArray:
        """Detectors on sites -n_max, ..., n_max"""
        return self.setup.detectors(self.half_width)

    def mode(self, site: int) -> Field1D:
        """Gaussian input mode centred on a lattice site"""
        position = self.setup.site_position(site)
        return gaussian_mode(self.setup.grid, position, self.waist)

    def path_entangled(self, phi: float) -> BiphotonState:
        """The path-entangled input state on the two input sites"""
        site_a, site_b = self.sites
        return build_path_entangled(
            self.setup.grid,
            self.setup.site_position(site_a),
            self.setup.site_position(site_b),
            self.waist,
            phi,
        )

    def sinusoidal_mask(self, amplitude: float) -> masks.Sinusoidal:
        """Sinusoidal grating registered with the lattice"""
        return self.setup.sinusoidal_mask(amplitude, x0=self.mask_origin)

    def zernike_mask(self, amplitude: float) -> masks.Composite:
        """Sinusoidal grating with the quarter-cell filter on top"""
        return masks.Composite(
            (
                self.sinusoidal_mask(amplitude),
                self.setup.zernike_mask(self.zernike_delta, x0=self.mask_origin),
            )
        )

    def phase_pairs(self) -> List[Tuple[int, int]]:
        """Indices (i, j) of configured phases with φ_j = -φ_i"""
        return _phase_pairs(self.phases)

    def map(self, func: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply func to every item, in parallel when workers > 1

        Results are returned in the order of the items.
        """
        items = list(items)
        if self.workers == 1 or len(items) < 2:
            return [func(item) for item in items]

        with concurrent.futures.ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(func, items))


def read_configuration(file_path: Union[str, pathlib.Path]) -> Configuration:
    """The packaged defaults updated with a scenario configuration file"""
    file_path = pathlib.Path(file_path)
    cfg = Configuration(name=file_path.name)
    cfg.update_from_str(defaults.read_defaults(), source=defaults.DEFAULTS_SOURCE)
    cfg.update_from_file(file_path)
    return cfg


def load_config(file_path: Union[str, pathlib.Path]) -> ScenarioConfig:
    """Read and validate a scenario configuration file"""
    file_path = pathlib.Path(file_path)
    return ScenarioConfig.from_configuration(
        read_configuration(file_path), base_dir=file_path.parent
    )


def _phase_pairs(phases: Iterable[float]) -> List[Tuple[int, int]]:
    """Indices (i, j) of phases with φ_j = -φ_i and φ_i > 0, φ_i ≠ π"""
    phases = list(phases)
    return [
        (i, j)
        for i, phi in enumerate(phases)
        for j, other in enumerate(phases)
        if 0 < phi < math.pi and math.isclose(other, -phi)
    ]


def _check_keys(cfg: Configuration) -> None:
    """Raise EntryError for entries that no scenario uses"""
    known = set(Configuration.from_str(defaults.read_defaults())) | OPTIONAL_KEYS
    for key in cfg:
        if key not in known:
            raise _exceptions.EntryError(
                f"{cfg.get_source(key)}: unknown entry {key!r}"
            )


def _fail(cfg: Configuration, key: str, message: str) -> NoReturn:
    """Raise EntryError pointing at the source of an entry"""
    raise _exceptions.EntryError(
        f"{cfg.get_source(key)}: {key} = {cfg.as_flat()[key]}: {message}"
    )


def _converted(cfg: Configuration, key: str, dtype: str, value: Any) -> Any:
    """Convert one item of an entry, reporting the entry's source on failure"""
    try:
        return convert_to(dtype, value)
    except (ValueError, TypeError, _exceptions.ConversionError) as err:
        raise _exceptions.ConversionError(
            f"{cfg.get_source(key)}: {key} = {value!r}: {err}"
        ) from None


def _positive(cfg: Configuration, key: str, dtype: str = "float") -> Any:
    """A strictly positive entry"""
    value = getattr(cfg, f"to_{dtype}")(key)
    if not value > 0:
        _fail(cfg, key, "must be positive")
    return value


def _positive_item(cfg: Configuration, key: str, value: float) -> float:
    """Check that an item of an entry is strictly positive"""
    if not value > 0:
        _fail(cfg, key, f"{value} must be positive")
    return value


def _non_negative(cfg: Configuration, key: str, value: float) -> float:
    """Check that an item of an entry is not negative"""
    if not value >= 0:
        _fail(cfg, key, f"{value} must not be negative")
    return value


def _phase(cfg: Configuration, key: str, value: float) -> float:
    """Check that a phase lies in (-π, π]"""
    if not -math.pi < value <= math.pi:
        _fail(cfg, key, f"phase {value} is outside (-π, π]")
    return value
