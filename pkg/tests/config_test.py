"""Tests for RunConfig and CLI argument parsing."""

from __future__ import annotations

import textwrap
from pathlib import Path
from unittest import mock

import pytest
from pydantic import ValidationError

from lyndon_induce.cli import main as cli_main
from lyndon_induce.config import BenchConfig, CheckConfig, OutputConfig, RunConfig
from lyndon_induce.options_enum import EmitKind, LyndonVariant, OutputFormat

# ---------------------------------------------------------------------------
# RunConfig.from_toml
# ---------------------------------------------------------------------------


def _write_toml(tmp_path: Path, content: str) -> Path:
    path = tmp_path / "config.toml"
    path.write_text(textwrap.dedent(content))
    return path


def test_from_toml_empty(tmp_path: Path) -> None:
    cfg = RunConfig.from_toml(_write_toml(tmp_path, ""))

    assert cfg.variant == LyndonVariant.INPLACE
    assert cfg.ingest.allow_empty
    assert not cfg.ingest.remap
    assert cfg.output.emit == EmitKind.BOTH
    assert cfg.output.format == OutputFormat.TEXT
    assert cfg.output.width is None
    assert not cfg.check.enabled
    assert cfg.check.brute_force_max_n == 64
    assert cfg.bench.reps == 1


def test_from_toml_full(tmp_path: Path) -> None:
    toml = _write_toml(
        tmp_path,
        """
        variant = "nsv-isa"

        [ingest]
        allow_empty = false
        remap = true

        [output]
        emit = "la"
        format = "binary"
        width = 8
        path = "out.bin"

        [check]
        enabled = true
        brute_force_max_n = 16
        naive_sa_max_n = 512
        nsv_max_n = 4096

        [bench]
        reps = 3
        double = 4
        key_value = true
        """,
    )

    cfg = RunConfig.from_toml(toml)

    assert cfg.variant == LyndonVariant.NSV_ISA
    assert not cfg.ingest.allow_empty
    assert cfg.ingest.remap
    assert cfg.output.emit == EmitKind.LA
    assert cfg.output.format == OutputFormat.BINARY
    assert cfg.output.width == 8
    assert cfg.output.path == Path("out.bin")
    assert cfg.check.enabled
    assert (cfg.check.brute_force_max_n, cfg.check.naive_sa_max_n, cfg.check.nsv_max_n) == (16, 512, 4096)
    assert (cfg.bench.reps, cfg.bench.double, cfg.bench.key_value) == (3, 4, True)


def test_from_toml_rejects_unknown_section(tmp_path: Path) -> None:
    toml = _write_toml(tmp_path, "[unknown_section]\nfoo = 1\n")

    with pytest.raises(ValidationError, match="unknown_section"):
        RunConfig.from_toml(toml)


def test_from_toml_rejects_unknown_variant(tmp_path: Path) -> None:
    with pytest.raises(ValidationError, match="variant"):
        RunConfig.from_toml(_write_toml(tmp_path, 'variant = "quadratic"\n'))


# ---------------------------------------------------------------------------
# Sections
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("width", [2, 16])
def test_output_config_width(width: int) -> None:
    with pytest.raises(ValidationError):
        OutputConfig(width=width)  # type: ignore[arg-type]


def test_check_config_caps_positive() -> None:
    with pytest.raises(ValidationError):
        CheckConfig(nsv_max_n=0)


def test_bench_config_reps_positive() -> None:
    with pytest.raises(ValidationError):
        BenchConfig(reps=0)


def test_sections_are_frozen() -> None:
    cfg = RunConfig()
    with pytest.raises(ValidationError):
        cfg.output.emit = EmitKind.SA  # type: ignore[misc]


def test_with_overrides_skips_unset_values() -> None:
    cfg = RunConfig(variant=LyndonVariant.NAIVE, output=OutputConfig(emit=EmitKind.LA))

    updated = cfg.with_overrides({"variant": None, "output": {"emit": None, "format": "binary"}})

    assert updated.variant == LyndonVariant.NAIVE
    assert updated.output.emit == EmitKind.LA
    assert updated.output.format == OutputFormat.BINARY
    assert cfg.output.format == OutputFormat.TEXT


# ---------------------------------------------------------------------------
# CLI wiring
# ---------------------------------------------------------------------------


def test_cli_reads_config_file(tmp_path: Path) -> None:
    toml = _write_toml(tmp_path, 'variant = "singleaux"\n[output]\nemit = "sa"\n')

    with mock.patch("lyndon_induce.cli.run_pipeline") as mock_run:
        assert cli_main(["--config", str(toml), "--text", "banana"]) == 0
        mock_run.assert_called_once()
        config, source, _ = mock_run.call_args.args

    assert config.variant == LyndonVariant.SINGLEAUX
    assert config.output.emit == EmitKind.SA
    assert source.text == "banana"


def test_cli_flags_override_config(tmp_path: Path) -> None:
    toml = _write_toml(tmp_path, 'variant = "singleaux"\n[output]\nemit = "sa"\n[check]\nenabled = false\n')

    with mock.patch("lyndon_induce.cli.run_pipeline") as mock_run:
        cli_main(["--config", str(toml), "--text", "abc", "--variant", "naive", "--emit", "la", "--check"])
        config, _, _ = mock_run.call_args.args

    assert config.variant == LyndonVariant.NAIVE
    assert config.output.emit == EmitKind.LA
    assert config.check.enabled


def test_cli_missing_config_is_io_error(tmp_path: Path) -> None:
    with mock.patch("lyndon_induce.cli.run_pipeline") as mock_run:
        assert cli_main(["--config", str(tmp_path / "absent.toml"), "--text", "a"]) == 2
        mock_run.assert_not_called()


def test_cli_invalid_config_is_usage_error(tmp_path: Path) -> None:
    toml = _write_toml(tmp_path, "[bench]\nreps = 0\n")

    assert cli_main(["--config", str(toml), "--text", "a"]) == 1
