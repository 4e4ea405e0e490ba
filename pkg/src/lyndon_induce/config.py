"""RunConfig model for driving runs and benchmarks from a TOML file."""

from __future__ import annotations

from pathlib import (
    Path,  # noqa: TC003 - Pydantic needs Path at runtime to resolve field types
)
from typing import Any, Literal

import tomllib
from pydantic import BaseModel, ConfigDict, Field

from lyndon_induce.options_enum import EmitKind, LyndonVariant, OutputFormat


class InputConfig(BaseModel):
    """[ingest] section - how raw bytes become a text."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    allow_empty: bool = True
    remap: bool = False


class OutputConfig(BaseModel):
    """[output] section - which arrays are written and how."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    emit: EmitKind = EmitKind.BOTH
    format: OutputFormat = OutputFormat.TEXT
    width: Literal[4, 8] | None = None
    path: Path | None = None


class CheckConfig(BaseModel):
    """[check] section - oracle comparison and its size caps."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    enabled: bool = False
    brute_force_max_n: int = Field(default=64, ge=1)
    naive_sa_max_n: int = Field(default=2048, ge=1)
    nsv_max_n: int = Field(default=1_000_000, ge=1)


class BenchConfig(BaseModel):
    """[bench] section - repetitions and doubling series."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    reps: int = Field(default=1, ge=1)
    double: int = Field(default=0, ge=0)
    key_value: bool = False


class RunConfig(BaseModel):
    """Top-level configuration of a run.

    Example:
    -------
    ```toml
    variant = "singleaux"

    [output]
    emit = "la"
    format = "binary"

    [check]
    enabled = true
    ```
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    variant: LyndonVariant = LyndonVariant.INPLACE
    ingest: InputConfig = Field(default_factory=InputConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    check: CheckConfig = Field(default_factory=CheckConfig)
    bench: BenchConfig = Field(default_factory=BenchConfig)

    @classmethod
    def from_toml(cls, path: Path) -> RunConfig:
        """Load and validate a :class:`RunConfig` from a TOML file."""
        with open(path, "rb") as f:
            data: dict[str, Any] = tomllib.load(f)
        return cls.model_validate(data)

    def with_overrides(self, overrides: dict[str, dict[str, Any] | Any]) -> RunConfig:
        """Return a copy with top-level values or section fields replaced.

        ``None`` values are skipped so unset CLI flags keep the loaded value.
        """
        data = self.model_dump()
        for key, value in overrides.items():
            if isinstance(value, dict):
                data[key].update({k: v for k, v in value.items() if v is not None})
            elif value is not None:
                data[key] = value
        return RunConfig.model_validate(data)
