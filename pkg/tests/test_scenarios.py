"""Test the config-driven scenarios"""

# Standard library imports
import json
import math

# Third party imports
import numpy as np
import pytest

# QFourier imports
from qfourier import _exceptions, scenarios


@pytest.fixture
def small_config(sample_dir, tmp_path):
    """Factory for validated scenario configurations on the small lattice"""

    def _small_config(kind, file_name="small.cfg", **entries):
        """Override the scenario kind and write output below tmp_path"""
        cfg = scenarios.read_configuration(sample_dir / file_name)
        cfg.update_entry("scenario", kind, source="test")
        cfg.update_entry("output_dir", str(tmp_path / kind), source="test")
        for key, value in entries.items():
            cfg.update_entry(key, value, source="test")
        return scenarios.ScenarioConfig.from_configuration(cfg, base_dir=sample_dir)

    return _small_config


def _read_summary(artifacts):
    """Parse summary.json of a scenario run"""
    return json.loads((artifacts.output_dir / "summary.json").read_text())


def test_scenario_names():
    """Test that every scenario kind is available"""
    assert set(scenarios.names()) == {
        "correlation_map",
        "custom",
        "fermion_aperture",
        "intensity_sweep",
        "zernike_retrieval",
    }


def test_load_config(sample_dir):
    """Test that defaults are updated by the configuration file"""
    config = scenarios.load_config(sample_dir / "small.cfg")

    assert config.kind == "correlation_map"
    assert config.setup.n == 512
    assert config.amplitude == pytest.approx(0.3 * math.pi)
    assert config.waist == pytest.approx(config.setup.pitch / 8)
    assert config.half_width == pytest.approx(config.setup.pitch / 4)
    assert config.phase_pairs() == [(1, 3)]
    assert config.configuration.get_source("wavelength") == "<defaults>:8"


def test_read_toml_config(sample_dir):
    """Test that TOML configurations validate like flat ones"""
    pytest.importorskip("toml")
    config = scenarios.load_config(sample_dir / "small.toml")
    assert config.phases == pytest.approx((0, math.pi / 2, math.pi, -math.pi / 2))


@pytest.mark.parametrize(
    "entries, message",
    [
        ({"scenario": "sweep"}, "use one of"),
        ({"defaults_version": "2"}, "expected 1"),
        ({"pitch": "-0.5"}, "must be positive"),
        ({"n": "500"}, "not a multiple"),
        ({"half_width": "0.3"}, "overlap"),
        ({"sites": "0, 0"}, "different sites"),
        ({"sites": "0, 1, 2"}, "exactly two"),
        ({"sites": "0, 7"}, "different sites"),
        ({"amplitudes": "0.1pi, -0.2pi"}, "negative"),
        ({"phase": "3pi/2"}, "outside"),
        ({"emit": "csv, png"}, "unknown format 'png'"),
        ({"aperture_fractions": "0.5, 0"}, "must be positive"),
        ({"workers": "0"}, "must be positive"),
    ],
)
def test_invalid_entries(small_config, entries, message):
    """Test that invalid entries are reported with their source"""
    with pytest.raises(_exceptions.EntryError, match=message) as err:
        small_config("correlation_map", **entries)
    assert str(err.value).startswith("test: ")


def test_zernike_needs_phase_pair(small_config):
    """Test that phase retrieval needs a pair ±φ"""
    with pytest.raises(_exceptions.EntryError, match="pair"):
        small_config("zernike_retrieval", phases="0, pi")


def test_custom_needs_mask(small_config):
    """Test that the custom scenario needs a mask file"""
    with pytest.raises(_exceptions.EntryError, match="custom_mask"):
        small_config("custom")


def test_unknown_entry(sample_dir):
    """Test that misspelled entries are reported with their line"""
    with pytest.raises(_exceptions.EntryError, match=r"unknown_key.cfg:3"):
        scenarios.load_config(sample_dir / "unknown_key.cfg")


def test_bad_phase(sample_dir):
    """Test that phases outside (-π, π] are reported with their line"""
    with pytest.raises(_exceptions.EntryError, match=r"bad_phase.cfg:4"):
        scenarios.load_config(sample_dir / "bad_phase.cfg")


def test_map_keeps_order(small_config):
    """Test that parallel workers return results in order"""
    config = small_config("correlation_map", workers="3")
    assert config.map(lambda x: x * x, range(10)) == [x * x for x in range(10)]


def test_correlation_map(small_config):
    """Test that Γ matches the oracle and ±π/2 coincide"""
    artifacts = scenarios.run_scenario(small_config("correlation_map"))
    summary = _read_summary(artifacts)
    metrics = summary["metrics"]

    assert metrics["max_relative_deviation"] < 0.02
    assert metrics["phase_pairs"][0]["distinguishability"] < 1e-9
    fractions = [p["diagonal_fraction"] for p in metrics["phases"]]
    assert fractions[0] < fractions[1] < fractions[2]
    assert {"gamma_phi0.csv", "oracle_phi3.json", "gamma_phi2.pgm"} <= set(
        summary["files"]
    )
    assert summary["config"]["amplitude"] == "0.3pi"


def test_correlation_table(small_config):
    """Test that Γ tables are labelled with detector sites"""
    artifacts = scenarios.run_scenario(small_config("correlation_map", emit="csv"))
    header, *rows = (artifacts.output_dir / "gamma_phi0.csv").read_text().splitlines()

    assert header.split(",") == ["q\\r"] + [str(q) for q in range(-6, 7)]
    assert len(rows) == 13
    assert not (artifacts.output_dir / "summary.json").exists()


def test_intensity_sweep(small_config):
    """Test that single and two beam walks follow the oracle"""
    artifacts = scenarios.run_scenario(small_config("intensity_sweep"))
    metrics = artifacts.metrics

    assert metrics["participation_monotone"]
    assert max(metrics["single_beam_max_relative_deviation"]) < 0.02
    assert max(metrics["two_beam_max_relative_deviation"]) < 0.02
    assert metrics["participation_number"] == pytest.approx(
        metrics["participation_number_oracle"], rel=1e-3
    )
    assert (artifacts.output_dir / "two_beam.pgm.json").exists()


def test_zernike_retrieval(small_config):
    """Test that the filter separates ±π/2 only when present"""
    artifacts = scenarios.run_scenario(small_config("zernike_retrieval"))
    (pair,) = artifacts.metrics["phase_pairs"]

    assert pair["distinguishability_plain"] < 1e-9
    assert pair["distinguishability_zernike"] > 0.01
    assert pair["distinguishability_zernike_oracle"] > 0.01
    assert (artifacts.output_dir / "gamma_zernike_phi1.pgm").exists()


def test_fermion_aperture(small_config):
    """Test that narrowing the aperture suppresses fermion pairs"""
    artifacts = scenarios.run_scenario(small_config("fermion_aperture"))
    metrics = artifacts.metrics

    assert metrics["fermion_monotone"]
    assert metrics["fermion_boson_ratio"][1] < metrics["fermion_boson_ratio"][0] < 1
    assert metrics["narrowest_ratio"] == metrics["fermion_boson_ratio"][1]
    table = (artifacts.output_dir / "aperture.csv").read_text().splitlines()
    assert table[0] == "fraction,width,boson,fermion,ratio"


def test_custom_equals_builtin_filter(small_config):
    """Test that a tabulated quarter-cell mask reproduces the built-in filter"""
    custom = scenarios.run_scenario(
        small_config("custom", "custom_small.cfg", emit="csv")
    )
    builtin = scenarios.run_scenario(
        small_config("zernike_retrieval", phases="pi/2, -pi/2", emit="csv")
    )

    def gamma(path):
        """Γ from a CSV table, without labels"""
        return np.loadtxt(path, delimiter=",", skiprows=1)[:, 1:]

    assert custom.metrics["is_phase_only"]
    assert np.allclose(
        gamma(custom.output_dir / "gamma_phi0.csv"),
        gamma(builtin.output_dir / "gamma_zernike_phi0.csv"),
        atol=1e-10,
    )


def test_custom_missing_file(small_config):
    """Test that a missing mask file is a configuration error"""
    config = small_config("custom", custom_mask="missing.txt")
    with pytest.raises(_exceptions.ConfigError, match="missing.txt"):
        scenarios.run_scenario(config)


def test_runs_are_deterministic(small_config):
    """Test that running a scenario twice gives byte-identical artifacts"""
    config = small_config("correlation_map")
    first = {p.name: p.read_bytes() for p in scenarios.run_scenario(config).files}
    second = {p.name: p.read_bytes() for p in scenarios.run_scenario(config).files}
    assert first == second


def test_workers_do_not_change_results(small_config, tmp_path):
    """Test that parallel runs give the same metrics as serial runs"""
    serial = scenarios.run_scenario(small_config("correlation_map", emit="csv"))
    parallel = scenarios.run_scenario(
        small_config(
            "correlation_map",
            emit="csv",
            workers="4",
            output_dir=str(tmp_path / "parallel"),
        )
    )
    assert serial.metrics == parallel.metrics


def test_unused_custom_mask_warns(small_config):
    """Test that a mask file given to another scenario gives a warning"""
    with pytest.warns(RuntimeWarning, match="not used by scenario"):
        config = small_config("correlation_map", custom_mask="quarter_cell.txt")
    assert config.custom_mask.name == "quarter_cell.txt"


def test_zernike_reports_marginal_target(small_config):
    """Test that every phase reports whether the marginal change meets the target"""
    metrics = scenarios.run_scenario(small_config("zernike_retrieval")).metrics
    flags = [p["marginal_change_within_target"] for p in metrics["phases"]]

    assert metrics["marginal_change_target"] == 0.05
    for phase, flag in zip(metrics["phases"], flags):
        assert flag == (phase["marginal_change"] < 0.05)
    assert metrics["marginal_change_within_target"] == all(flags)
