"""Working-space accounting.

Two figures are kept. :class:`WordArena` is the ledger: every working array
an algorithm requests is charged to it by label and recursion level, which
gives the per-level breakdown and the debug log. :func:`traced` measures what
was actually allocated with :mod:`tracemalloc`; numpy registers its data
buffers there, so the peak covers every array and temporary together with
the interpreter objects live at that moment. Reports use the traced figure.
"""

from __future__ import annotations

import logging
import tracemalloc
from contextlib import contextmanager
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    import numpy.typing as npt

logger = logging.getLogger(__name__)

INT32_LIMIT = 2**31 - 1


def index_dtype(n: int, *, wide: bool = False) -> np.dtype[np.signedinteger]:
    """Smallest signed dtype that holds every value up to ``n + 1``."""
    if wide or n + 1 > INT32_LIMIT:
        return np.dtype(np.int64)
    return np.dtype(np.int32)


def buffer_bytes(array: np.ndarray) -> int:
    """Size of the allocation behind ``array``, padding slots included."""
    while isinstance(array.base, np.ndarray):
        array = array.base
    return array.nbytes


@dataclass
class TracedPeak:
    """Peak bytes allocated inside a :func:`traced` block, above its baseline."""

    peak_bytes: int = 0

    def extra_words(self, outputs: Iterable[np.ndarray], itemsize: int) -> int:
        """Peak less the buffers of ``outputs``, in words of ``itemsize`` bytes."""
        extra = self.peak_bytes - sum(buffer_bytes(array) for array in outputs)
        return max(0, -(-extra // itemsize))


@contextmanager
def traced() -> Iterator[TracedPeak]:
    """Measure the peak traced memory of the ``with`` block.

    Starts :mod:`tracemalloc` when it is not running and stops it again on
    exit. An enclosing measurement loses its own peak.
    """
    owner = not tracemalloc.is_tracing()
    if owner:
        tracemalloc.start()
    tracemalloc.reset_peak()
    baseline, _ = tracemalloc.get_traced_memory()
    peak = TracedPeak()
    try:
        yield peak
    finally:
        _, top = tracemalloc.get_traced_memory()
        peak.peak_bytes = top - baseline
        if owner:
            tracemalloc.stop()
        logger.debug("traced peak: %d bytes", peak.peak_bytes)


@dataclass(frozen=True, eq=False)
class _Allocation:
    array: np.ndarray
    words: int
    level: int
    label: str


@dataclass(frozen=True)
class WorkspaceUsage:
    """Peak figures captured from an arena."""

    peak_words: int
    recursion_peak_words: int


class WordArena:
    """Hands out zeroed numpy arrays and tracks the words currently live.

    Level 0 allocations count toward :attr:`peak_words`. Allocations made for
    deeper recursion levels are tracked separately in
    :attr:`recursion_peak_words`.
    """

    def __init__(self) -> None:
        self._live: dict[int, _Allocation] = {}
        self.current_words = 0
        self.peak_words = 0
        self.recursion_words = 0
        self.recursion_peak_words = 0

    def allocate(
        self,
        size: int,
        dtype: npt.DTypeLike,
        *,
        label: str,
        level: int = 0,
    ) -> np.ndarray:
        """Return a zeroed working array of ``size`` elements and charge it."""
        array = np.zeros(size, dtype=dtype)
        self._live[id(array)] = _Allocation(array, size, level, label)
        if level == 0:
            self.current_words += size
            self.peak_words = max(self.peak_words, self.current_words)
        else:
            self.recursion_words += size
            self.recursion_peak_words = max(self.recursion_peak_words, self.recursion_words)
        logger.debug("allocate %s: %d words at level %d", label, size, level)
        return array

    def output(self, size: int, dtype: npt.DTypeLike, *, label: str) -> np.ndarray:
        """Return a zeroed array for a declared output; it is not charged."""
        logger.debug("output buffer %s: %d words", label, size)
        return np.zeros(size, dtype=dtype)

    def release(self, array: np.ndarray) -> None:
        """Give back an array obtained from :meth:`allocate`."""
        try:
            allocation = self._live.pop(id(array))
        except KeyError:
            raise ValueError("array was not allocated by this arena") from None
        if allocation.level == 0:
            self.current_words -= allocation.words
        else:
            self.recursion_words -= allocation.words
        logger.debug("release %s: %d words", allocation.label, allocation.words)

    def charge(self, words: int, *, label: str) -> None:
        """Record a transient use of ``words`` on top of what is live now."""
        logger.debug("transient %s: %d words", label, words)
        self.peak_words = max(self.peak_words, self.current_words + words)

    @contextmanager
    def borrow(
        self,
        size: int,
        dtype: npt.DTypeLike,
        *,
        label: str,
        level: int = 0,
    ) -> Iterator[np.ndarray]:
        """Allocate for the duration of a ``with`` block."""
        array = self.allocate(size, dtype, label=label, level=level)
        try:
            yield array
        finally:
            self.release(array)

    @property
    def live_labels(self) -> list[str]:
        return [allocation.label for allocation in self._live.values()]

    def usage(self) -> WorkspaceUsage:
        return WorkspaceUsage(peak_words=self.peak_words, recursion_peak_words=self.recursion_peak_words)
