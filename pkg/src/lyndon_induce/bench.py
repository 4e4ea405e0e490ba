"""Timed runs, workspace figures and doubling series."""

from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import TYPE_CHECKING

from lyndon_induce.lyndon import induce_lyndon
from lyndon_induce.options_enum import CheckStatus, LyndonVariant
from lyndon_induce.oracles import CheckLimits, compare_with_oracles
from lyndon_induce.sacak import WorkBuffer, sort_suffixes
from lyndon_induce.textcore import BYTE_SIGMA
from lyndon_induce.workspace import WordArena, traced

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from lyndon_induce.generators import GeneratorSpec
    from lyndon_induce.textcore import LyndonArray, SuffixArray, Text

logger = logging.getLogger(__name__)

WORD_BYTES = 4


@dataclass(frozen=True)
class RunReport:
    """Measurements of one (input, variant) run."""

    input_name: str
    n: int
    sigma_effective: int
    variant: LyndonVariant
    elapsed_wall_time: float
    avelyn: Fraction | None
    peak_extra_words: int
    recursion_words: int
    nsv_max_stack_depth: int | None
    check_status: CheckStatus
    keeps_sa: bool = True

    def __post_init__(self) -> None:
        if self.elapsed_wall_time < 0:
            raise ValueError("elapsed time cannot be negative")
        if self.peak_extra_words < BYTE_SIGMA:
            raise ValueError(f"peak_extra_words {self.peak_extra_words} is below the cursor array size")
        if self.avelyn is not None and not 1 <= self.avelyn <= Fraction(self.n + 1, 2):
            raise ValueError(f"avelyn {self.avelyn} outside [1, (n+1)/2]")

    @property
    def micros_per_symbol(self) -> float:
        return self.elapsed_wall_time * 1e6 / self.n

    @property
    def bytes_per_symbol(self) -> float:
        """Peak footprint per input byte with 4-byte words, text and outputs included."""
        outputs = int(self.keeps_sa) + int(self.variant is not LyndonVariant.SA_ONLY)
        total = self.n + WORD_BYTES * (outputs * self.n + self.peak_extra_words)
        return total / self.n

    @staticmethod
    def header() -> str:
        names = [f.name for f in fields(RunReport) if f.name != "keeps_sa"]
        return "\t".join([*names, "us_per_symbol", "bytes_per_symbol"])

    def _cells(self) -> dict[str, str]:
        cells = {k: ("-" if v is None else str(v)) for k, v in asdict(self).items() if k != "keeps_sa"}
        cells["elapsed_wall_time"] = f"{self.elapsed_wall_time:.6f}"
        if self.avelyn is not None:
            cells["avelyn"] = f"{float(self.avelyn):.4f}"
        cells["us_per_symbol"] = f"{self.micros_per_symbol:.3f}"
        cells["bytes_per_symbol"] = f"{self.bytes_per_symbol:.3f}"
        return cells

    def to_row(self) -> str:
        return "\t".join(self._cells().values())

    def to_key_value(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self._cells().items())


@dataclass(frozen=True, eq=False)
class RunOutputs:
    sa: SuffixArray | None
    la: LyndonArray | None


def _compute(
    text: Text, variant: LyndonVariant, arena: WordArena, *, keep_sa: bool, wide: bool
) -> tuple[RunOutputs, int | None]:
    if variant is LyndonVariant.SA_ONLY:
        sa = sort_suffixes(text, arena=arena, buffer=WorkBuffer.new(text.n, arena=arena, wide=wide))
        return RunOutputs(sa=sa, la=None), None
    induced = induce_lyndon(text, variant, arena=arena, keep_sa=keep_sa, wide=wide)
    return RunOutputs(sa=induced.sa, la=induced.la), induced.nsv_max_stack_depth


def run_once(
    text: Text,
    variant: LyndonVariant,
    *,
    name: str,
    keep_sa: bool = True,
    check: CheckLimits | None = None,
    wide: bool = False,
) -> tuple[RunOutputs, RunReport]:
    """Compute the arrays for ``text`` once under :func:`traced`.

    ``peak_extra_words`` is the traced peak less the output buffers, so the
    elapsed time includes the tracing overhead. ``check`` enables the oracle
    comparison with the given limits.
    """
    arena = WordArena()
    with traced() as peak:
        started = time.perf_counter()
        outputs, depth = _compute(text, variant, arena, keep_sa=keep_sa, wide=wide)
        elapsed = time.perf_counter() - started
    arrays = [a.entries for a in (outputs.sa, outputs.la) if a is not None]
    extra_words = peak.extra_words(arrays, arrays[0].dtype.itemsize)

    status = CheckStatus.SKIPPED
    if check is not None:
        status = compare_with_oracles(text, outputs.sa, outputs.la, check)
    report = RunReport(
        input_name=name,
        n=text.n,
        sigma_effective=text.sigma_effective,
        variant=variant,
        elapsed_wall_time=elapsed,
        avelyn=None if outputs.la is None else outputs.la.avelyn,
        peak_extra_words=extra_words,
        recursion_words=arena.recursion_peak_words,
        nsv_max_stack_depth=depth,
        check_status=status,
        keeps_sa=keep_sa or variant is LyndonVariant.SA_ONLY,
    )
    logger.info(
        "%s %s: n=%d %.3fs peak=%d words (charged %d)", name, variant, text.n, elapsed, extra_words, arena.peak_words
    )
    return outputs, report


def _timed_run(text: Text, variant: LyndonVariant, *, keep_sa: bool) -> float:
    """Seconds for one untraced computation."""
    started = time.perf_counter()
    _compute(text, variant, WordArena(), keep_sa=keep_sa, wide=False)
    return time.perf_counter() - started


def bench(
    inputs: Iterable[tuple[str, Text]],
    variants: Sequence[LyndonVariant],
    *,
    reps: int = 1,
    keep_sa: bool = True,
    check: CheckLimits | None = None,
) -> list[RunReport]:
    """One report per (input, variant), keeping the fastest of ``reps`` runs.

    The first repetition is traced for the workspace figure and carries the
    oracle comparison when requested; the others are timed without tracing.
    """
    if reps < 1:
        raise ValueError("reps must be at least 1")
    reports: list[RunReport] = []
    for name, text in inputs:
        for variant in variants:
            _, best = run_once(text, variant, name=name, keep_sa=keep_sa, check=check)
            for _ in range(reps - 1):
                elapsed = _timed_run(text, variant, keep_sa=keep_sa)
                if elapsed < best.elapsed_wall_time:
                    best = _with_time(best, elapsed)
            reports.append(best)
    return reports


def _with_time(report: RunReport, elapsed: float) -> RunReport:
    data = asdict(report)
    data["elapsed_wall_time"] = elapsed
    return RunReport(**data)


def doubling_series(spec: GeneratorSpec, doublings: int) -> list[GeneratorSpec]:
    """``spec`` at sizes ``size, 2 size, ..., 2^doublings size``."""
    return [spec.resized(spec.size << k) for k in range(doublings + 1)]


def time_ratios(reports: Sequence[RunReport]) -> list[float]:
    """Time per symbol of every report relative to the first one."""
    if not reports:
        return []
    base = reports[0].micros_per_symbol
    return [report.micros_per_symbol / base if base else float("inf") for report in reports]
