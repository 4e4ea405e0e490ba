"""Staged runner: ingest, compute, check, write."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, TextIO, TypeVar

from lyndon_induce.bench import RunOutputs, RunReport, bench, doubling_series, run_once
from lyndon_induce.errors import ErrorCode, LyndonInduceError
from lyndon_induce.generators import GeneratorSpec, generate_bytes
from lyndon_induce.options_enum import CheckStatus, EmitKind, LyndonVariant, OutputFormat
from lyndon_induce.oracles import CheckLimits
from lyndon_induce.serialization import save_binary, write_text
from lyndon_induce.textcore import Text, load_text, remap_alphabet

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    import numpy as np

    from lyndon_induce.config import CheckConfig, InputConfig, OutputConfig, RunConfig

logger = logging.getLogger(__name__)

_T = TypeVar("_T")


def _run_stage(name: str, fn: Callable[[], _T]) -> _T:
    logger.info("  Starting %s ...", name)
    try:
        result = fn()
    except Exception:
        logger.exception("Stage '%s' failed:", name)
        raise
    logger.info("  %s completed.", name)
    return result


@dataclass(frozen=True)
class InputSource:
    """Exactly one of ``text``, ``file`` or ``generator`` is set."""

    text: str | None = None
    file: Path | None = None
    generator: str | None = None

    def __post_init__(self) -> None:
        given = [v for v in (self.text, self.file, self.generator) if v is not None]
        if len(given) != 1:
            raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "give exactly one of --text, --file, --gen")

    @property
    def name(self) -> str:
        if self.file is not None:
            return self.file.name
        if self.generator is not None:
            return GeneratorSpec.parse(self.generator).name
        return "text"

    def read_bytes(self) -> bytes:
        if self.text is not None:
            return self.text.encode()
        if self.file is not None:
            try:
                return self.file.read_bytes()
            except OSError as exc:
                raise LyndonInduceError(ErrorCode.IO_ERROR, f"cannot read {self.file}: {exc}") from exc
        return generate_bytes(GeneratorSpec.parse(str(self.generator)))


def ingest(source: InputSource, config: InputConfig) -> Text:
    """Read, optionally remap, and terminate the input."""
    raw = source.read_bytes()
    if config.remap:
        raw = remap_alphabet(raw)
    return load_text(raw, allow_empty=config.allow_empty)


def check_limits(config: CheckConfig) -> CheckLimits | None:
    if not config.enabled:
        return None
    return CheckLimits(
        brute_force_max_n=config.brute_force_max_n,
        naive_sa_max_n=config.naive_sa_max_n,
        nsv_max_n=config.nsv_max_n,
    )


@dataclass(frozen=True, eq=False)
class RunOutcome:
    outputs: RunOutputs
    report: RunReport


def run_pipeline(config: RunConfig, source: InputSource, stdout: TextIO) -> RunOutcome:
    """Run one input through the configured variant and write its arrays.

    Raises:
        LyndonInduceError: ``CHECK_FAILED`` after the outputs are written
            when an oracle disagrees.
    """
    logger.debug("Config: %s", config.model_dump_json())
    _validate_output(config)
    text = _run_stage("ingest", lambda: ingest(source, config.ingest))
    logger.info("  n=%d sigma_effective=%d variant=%s", text.n, text.sigma_effective, config.variant)
    outputs, report = _run_stage(
        "induce",
        lambda: run_once(
            text,
            config.variant,
            name=source.name,
            keep_sa=config.output.emit.wants_sa,
            check=check_limits(config.check),
            wide=config.output.width == 8,
        ),
    )
    _run_stage("write", lambda: write_outputs(outputs, config.output, stdout))
    if report.check_status is CheckStatus.FAIL:
        raise LyndonInduceError(ErrorCode.CHECK_FAILED, f"oracle mismatch on {source.name}")
    return RunOutcome(outputs=outputs, report=report)


def _validate_output(config: RunConfig) -> None:
    output = config.output
    if output.format is OutputFormat.BINARY and output.path is None:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "binary output needs --out")
    if config.variant is LyndonVariant.SA_ONLY and output.emit.wants_la:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "variant sa-only cannot emit the Lyndon array")


def _selected(outputs: RunOutputs, emit: EmitKind) -> list[tuple[str, np.ndarray]]:
    arrays: list[tuple[str, np.ndarray]] = []
    if emit.wants_sa and outputs.sa is not None:
        arrays.append(("sa", outputs.sa.entries))
    if emit.wants_la and outputs.la is not None:
        arrays.append(("la", outputs.la.entries))
    return arrays


def write_outputs(outputs: RunOutputs, config: OutputConfig, stdout: TextIO) -> list[Path]:
    """Write the emitted arrays; returns the files created.

    Binary output with both arrays goes to ``PATH.sa`` and ``PATH.la``.
    """
    arrays = _selected(outputs, config.emit)
    if config.format is OutputFormat.TEXT:
        columns = [values for _, values in arrays]
        if config.path is None:
            write_text(stdout, columns)
            return []
        try:
            with open(config.path, "w", encoding="utf-8") as f:
                write_text(f, columns)
        except OSError as exc:
            raise LyndonInduceError(ErrorCode.IO_ERROR, f"cannot write {config.path}: {exc}") from exc
        return [config.path]

    if config.path is None:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "binary output needs --out")
    written = []
    for suffix, values in arrays:
        path = config.path if len(arrays) == 1 else Path(f"{config.path}.{suffix}")
        try:
            save_binary(path, values, width=config.width)
        except OSError as exc:
            raise LyndonInduceError(ErrorCode.IO_ERROR, f"cannot write {path}: {exc}") from exc
        written.append(path)
    logger.info("  Saved -> %s", ", ".join(str(p) for p in written))
    return written


def run_bench(config: RunConfig, sources: Sequence[InputSource], variants: Sequence[LyndonVariant]) -> list[RunReport]:
    """Benchmark every source with every variant.

    Generator sources expand into a doubling series of ``config.bench.double``
    steps; other sources run at their own size.
    """
    inputs: list[tuple[str, Text]] = []
    for source in sources:
        if source.generator is not None and config.bench.double:
            for spec in doubling_series(GeneratorSpec.parse(source.generator), config.bench.double):
                inputs.append((spec.name, load_text(generate_bytes(spec))))
        else:
            inputs.append((source.name, ingest(source, config.ingest)))
    return _run_stage(
        "bench",
        lambda: bench(
            inputs,
            variants,
            reps=config.bench.reps,
            keep_sa=config.output.emit.wants_sa,
            check=check_limits(config.check),
        ),
    )
