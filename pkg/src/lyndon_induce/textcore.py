"""Core value types, suffix classification and bucket bookkeeping.

Positions are 1-based. Internally every array carries one unused slot at
index 0 so that ``array[i]`` is the value at position ``i``; the public types
expose the entries for positions ``1..n`` only.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import TYPE_CHECKING, Self

import numpy as np

from lyndon_induce.errors import ErrorCode, LyndonInduceError
from lyndon_induce.workspace import index_dtype

if TYPE_CHECKING:
    from lyndon_induce.workspace import WordArena

SENTINEL = 0
BYTE_SIGMA = 256
EMPTY = 0


class SuffixKind(StrEnum):
    """Suffix type relative to the suffix starting one position to the right."""

    S = "S"
    L = "L"


class BucketMode(StrEnum):
    """Which end of each bucket the cursors track."""

    HEAD = "head"
    TAIL = "tail"


@dataclass(frozen=True, eq=False)
class Text:
    """A byte string terminated by the sentinel.

    ``symbols`` is the padded, read-only ``uint8`` array: ``symbols[n]`` is the
    sentinel and ``symbols[0]`` is unused.
    """

    symbols: np.ndarray
    sigma: int = BYTE_SIGMA

    @property
    def n(self) -> int:
        return len(self.symbols) - 1

    @property
    def raw(self) -> bytes:
        """The input bytes without the sentinel."""
        return self.symbols[1:-1].tobytes()

    @property
    def sigma_effective(self) -> int:
        """Number of distinct symbol values present, sentinel included."""
        return int(np.count_nonzero(np.bincount(self.symbols[1:], minlength=1)))

    def at(self, i: int) -> int:
        return int(self.symbols[i])

    def factor(self, start: int, length: int) -> tuple[int, ...]:
        """Symbols of ``T[start, start + length - 1]``."""
        return tuple(int(c) for c in self.symbols[start : start + length])

    def suffix(self, start: int) -> bytes:
        """Suffix bytes from ``start`` through the sentinel, for direct comparison."""
        return self.symbols[start:].tobytes()

    def __repr__(self) -> str:
        return f"Text(n={self.n}, raw={self.raw[:32]!r}{'...' if self.n > 33 else ''})"


def load_text(raw: bytes | bytearray | memoryview, *, allow_empty: bool = True) -> Text:
    """Append the sentinel to ``raw`` and validate it.

    Raises:
        LyndonInduceError: ``EMPTY_INPUT`` when ``raw`` is empty and
            ``allow_empty`` is false, ``SENTINEL_IN_INPUT`` when ``raw``
            contains byte 0.
    """
    data = np.frombuffer(bytes(raw), dtype=np.uint8)
    if data.size == 0 and not allow_empty:
        raise LyndonInduceError(ErrorCode.EMPTY_INPUT, "empty input is disabled by configuration")
    zeros = np.flatnonzero(data == SENTINEL)
    if zeros.size:
        raise LyndonInduceError(
            ErrorCode.SENTINEL_IN_INPUT,
            f"byte 0 is reserved for the sentinel (first at offset {int(zeros[0])}); use --remap",
        )
    symbols = np.zeros(data.size + 2, dtype=np.uint8)
    symbols[1:-1] = data
    symbols.flags.writeable = False
    return Text(symbols=symbols)


def remap_alphabet(raw: bytes) -> bytes:
    """Map the distinct byte values of ``raw`` onto ``1..k`` preserving order.

    Raises:
        LyndonInduceError: ``SENTINEL_IN_INPUT`` when ``raw`` uses all 256
            byte values, leaving none free for the sentinel.
    """
    data = np.frombuffer(raw, dtype=np.uint8)
    present = np.unique(data)
    if present.size >= BYTE_SIGMA:
        raise LyndonInduceError(
            ErrorCode.SENTINEL_IN_INPUT,
            "input uses all 256 byte values; remapping leaves no value free for the sentinel",
        )
    table = np.zeros(BYTE_SIGMA, dtype=np.uint8)
    table[present] = np.arange(1, present.size + 1, dtype=np.uint8)
    return table[data].tobytes()


@dataclass(frozen=True, eq=False)
class _PositionArray:
    """Array of ``n`` integers indexed by 1-based position."""

    entries: np.ndarray

    @classmethod
    def from_values(cls, values: Iterable[int]) -> Self:
        data = np.fromiter(values, dtype=np.int64)
        return cls(entries=data.astype(index_dtype(len(data))))

    @property
    def n(self) -> int:
        return len(self.entries)

    def at(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(f"position {i} outside 1..{len(self.entries)}")
        return int(self.entries[i - 1])

    def tolist(self) -> list[int]:
        return [int(v) for v in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return (int(v) for v in self.entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _PositionArray):
            return type(self) is type(other) and bool(np.array_equal(self.entries, other.entries))
        if isinstance(other, Sequence):
            return self.tolist() == list(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self.entries[:16])
        return f"{type(self).__name__}([{head}{', ...' if len(self) > 16 else ''}])"


class SuffixArray(_PositionArray):
    """Starting positions of the suffixes in ascending lexicographic order."""


class InverseSuffixArray(_PositionArray):
    """Rank of each suffix: ``ISA[SA[i]] = i``."""


class LyndonArray(_PositionArray):
    """Length of the longest Lyndon factor starting at each position."""

    @property
    def avelyn(self) -> Fraction:
        """Average entry, the cost driver of the naive variant."""
        return Fraction(int(self.entries.sum(dtype=np.int64)), len(self.entries))


@dataclass(frozen=True, eq=False)
class TypeMap:
    """S/L type of every suffix; ``is_s`` is padded like the text."""

    is_s: np.ndarray

    @property
    def n(self) -> int:
        return len(self.is_s) - 1

    def kind(self, i: int) -> SuffixKind:
        return SuffixKind.S if self.is_s[i] else SuffixKind.L

    @property
    def kinds(self) -> tuple[SuffixKind, ...]:
        return tuple(self.kind(i) for i in range(1, self.n + 1))

    def is_lms(self, i: int) -> bool:
        return i > 1 and bool(self.is_s[i]) and not bool(self.is_s[i - 1])


def classify(text: Text) -> TypeMap:
    """Type every suffix with the right-to-left propagation rule."""
    n = text.n
    is_s = np.zeros(n + 1, dtype=np.bool_)
    is_s[n] = True
    s = memoryview(text.symbols)
    successor_s = True
    for i in range(n - 1, 0, -1):
        c, d = s[i], s[i + 1]
        successor_s = c < d or (c == d and successor_s)
        is_s[i] = successor_s
    is_s.flags.writeable = False
    return TypeMap(is_s=is_s)


@dataclass(frozen=True, eq=False)
class BucketArray:
    """Per-symbol insertion cursors; the cursor array is updated while inducing."""

    cursors: np.ndarray
    mode: BucketMode

    def cursor(self, symbol: int) -> int:
        return int(self.cursors[symbol])


def fill_bucket_cursors(symbols: np.ndarray, n: int, cursors: np.ndarray, mode: BucketMode) -> None:
    """Write head or tail slots of every bucket of ``symbols[1..n]`` into ``cursors``.

    Empty buckets get ``head = tail + 1``. Counting and prefix sums run in
    place over ``cursors``; nothing else is allocated.
    """
    cursors[:] = 0
    c_v = memoryview(cursors)
    for c in memoryview(symbols)[1 : n + 1]:
        c_v[c] += 1
    head = mode is BucketMode.HEAD
    total = 0
    for k in range(len(c_v)):
        count = c_v[k]
        total += count
        c_v[k] = total - count + 1 if head else total


def bucket_bounds(text: Text, mode: BucketMode, *, arena: WordArena | None = None) -> BucketArray:
    """Compute bucket cursors for ``text`` in ``mode``.

    With an ``arena`` the cursor array is charged to it; the caller releases
    it through :meth:`WordArena.release`.
    """
    dtype = index_dtype(text.n)
    if arena is None:
        cursors = np.zeros(text.sigma, dtype=dtype)
    else:
        cursors = arena.allocate(text.sigma, dtype, label="bucket cursors")
    fill_bucket_cursors(text.symbols, text.n, cursors, mode)
    return BucketArray(cursors=cursors, mode=mode)
