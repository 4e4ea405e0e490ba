"""Suffix sorting by induced sorting in constant working space.

Level 0 allocates one cursor array of ``sigma`` words. The reduced string of
each recursion level and its suffix array share the parent's work buffer:
names occupy the top ``n1`` slots and the reduced suffix array the bottom
``n1`` slots. Suffix types are recomputed from neighbouring symbols and
bucket cursors instead of being stored.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Protocol

import numpy as np

from lyndon_induce.textcore import (
    EMPTY,
    BucketArray,
    BucketMode,
    SuffixArray,
    Text,
    TypeMap,
    fill_bucket_cursors,
)
from lyndon_induce.workspace import WordArena, index_dtype

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Sequence

logger = logging.getLogger(__name__)


class ReadHook(Protocol):
    def __call__(self, i: int, j: int, /) -> None: ...


class FinalPassListener(Protocol):
    """Receives every read of the last right-to-left pass at level 0."""

    def start(self) -> None:
        """Called once right before the last pass begins."""

    def __call__(self, i: int, j: int, /) -> None:
        """Slot ``i`` holds suffix ``j`` at its final rank."""


@dataclass(frozen=True, eq=False)
class WorkBuffer:
    """The suffix array under construction; ``slots[0]`` is unused."""

    slots: np.ndarray

    @classmethod
    def new(cls, n: int, *, arena: WordArena | None = None, charged: bool = False, wide: bool = False) -> WorkBuffer:
        """Allocate an all-EMPTY buffer for a text of length ``n``.

        ``charged`` buffers count as working space (used when the suffix
        array is not part of the requested output).
        """
        dtype = index_dtype(n, wide=wide)
        if arena is None:
            return cls(np.zeros(n + 1, dtype=dtype))
        if charged:
            return cls(arena.allocate(n + 1, dtype, label="suffix array"))
        return cls(arena.output(n + 1, dtype, label="suffix array"))

    @property
    def n(self) -> int:
        return len(self.slots) - 1

    def entries(self) -> list[int]:
        return [int(v) for v in self.slots[1:]]

    def to_suffix_array(self) -> SuffixArray:
        view = self.slots[1:]
        if view.min() == EMPTY:
            raise RuntimeError("work buffer still holds EMPTY slots")
        view.flags.writeable = False
        return SuffixArray(entries=view)


@dataclass(frozen=True)
class ReducedString:
    """Names of consecutive LMS-factors in text order, as 1-based ranks."""

    names: tuple[int, ...]
    alphabet_size: int

    @property
    def n1(self) -> int:
        return len(self.names)


# ---------------------------------------------------------------------------
# Step-by-step operations over an explicit TypeMap
# ---------------------------------------------------------------------------


def lms_positions(types: TypeMap) -> list[int]:
    """Ascending positions whose suffix is S-type and left neighbour L-type."""
    return [i for i in range(2, types.n + 1) if types.is_lms(i)]


def _require_mode(buckets: BucketArray, mode: BucketMode) -> None:
    if buckets.mode is not mode:
        raise ValueError(f"expected {mode} cursors, got {buckets.mode}")


def place_lms(buf: WorkBuffer, order: Sequence[int], buckets: BucketArray, *, text: Text) -> None:
    """Write LMS positions, given in ascending suffix order, at their bucket tails."""
    _require_mode(buckets, BucketMode.TAIL)
    slots, cursors, symbols = buf.slots, buckets.cursors, text.symbols
    for p in reversed(order):
        c = symbols[p]
        slots[cursors[c]] = p
        cursors[c] -= 1


def induce_L(  # noqa: N802
    buf: WorkBuffer,
    text: Text,
    types: TypeMap | None,
    buckets: BucketArray,
    hook: ReadHook | None = None,
) -> None:
    """Left-to-right pass placing every L-type suffix at its bucket head.

    With ``types=None`` the L test is made from symbols alone.
    """
    _require_mode(buckets, BucketMode.HEAD)
    _induce_l(buf.slots, text.symbols, text.n, buckets.cursors, None if types is None else types.is_s, hook=hook)


def induce_S(  # noqa: N802
    buf: WorkBuffer,
    text: Text,
    types: TypeMap | None,
    buckets: BucketArray,
    hook: ReadHook | None = None,
) -> None:
    """Right-to-left pass placing every S-type suffix at its bucket tail.

    ``hook(i, buf[i])`` fires for every ``i`` from ``n`` down to 1 as the slot
    is read.
    """
    _require_mode(buckets, BucketMode.TAIL)
    _induce_s(buf.slots, text.symbols, text.n, buckets.cursors, None if types is None else types.is_s, hook=hook)


def name_lms_factors(buf: WorkBuffer, text: Text, types: TypeMap) -> tuple[ReducedString, bool]:
    """Name the LMS-factors from a buffer whose LMS entries are in sorted order.

    Returns the reduced string in text order of the LMS positions and whether
    every name is distinct. ``buf`` is left untouched.
    """
    n = text.n
    work = buf.slots.copy()
    slots = memoryview(work)
    n1 = 0
    for i in range(1, n + 1):
        p = slots[i]
        if p != EMPTY and types.is_lms(p):
            n1 += 1
            slots[n1] = p
    if n1 == 0:
        return ReducedString(names=(), alphabet_size=0), True
    count = _name_lms_substrings(work, memoryview(text.symbols), n, n1)
    names = tuple(int(v) + 1 for v in work[n - n1 + 1 : n + 1])
    return ReducedString(names=names, alphabet_size=count), count == n1


# ---------------------------------------------------------------------------
# Induction loops shared by the public passes and the recursive sorter
# ---------------------------------------------------------------------------


def _induce_l(
    sa: np.ndarray,
    s: np.ndarray,
    n: int,
    bkt: np.ndarray,
    is_s: np.ndarray | None,
    *,
    erase: bool = False,
    hook: ReadHook | None = None,
) -> None:
    sa_v, s_v, b_v = memoryview(sa), memoryview(s), memoryview(bkt)
    t_v = None if is_s is None else memoryview(is_s)
    for i in range(1, n + 1):
        p = sa_v[i]
        if hook is not None:
            hook(i, p)
        if p <= 1:
            continue
        j = p - 1
        c = s_v[j]
        if (c >= s_v[p]) if t_v is None else not t_v[j]:
            slot = b_v[c]
            sa_v[slot] = j
            b_v[c] = slot + 1
            # slot 1 always holds the sentinel suffix
            if erase and i > 1:
                sa_v[i] = EMPTY


def _induce_s(
    sa: np.ndarray,
    s: np.ndarray,
    n: int,
    bkt: np.ndarray,
    is_s: np.ndarray | None,
    *,
    erase: bool = False,
    hook: ReadHook | None = None,
) -> None:
    sa_v, s_v, b_v = memoryview(sa), memoryview(s), memoryview(bkt)
    t_v = None if is_s is None else memoryview(is_s)
    for i in range(n, 0, -1):
        p = sa_v[i]
        if hook is not None:
            hook(i, p)
        if p <= 1:
            continue
        j = p - 1
        c = s_v[j]
        if t_v is None:
            d = s_v[p]
            # equal symbols: j is S-type iff p sits in the S part of the bucket
            s_type = c < d or (c == d and b_v[c] < i)
        else:
            s_type = t_v[j]
        if s_type:
            slot = b_v[c]
            sa_v[slot] = j
            b_v[c] = slot - 1
            if erase:
                sa_v[i] = EMPTY


def _iter_lms_desc(s_v: memoryview, n: int) -> Iterator[int]:
    """LMS positions from right to left, types computed on the fly."""
    if n < 2:
        return
    yield n
    successor_s = False
    for i in range(n - 2, 0, -1):
        c, d = s_v[i], s_v[i + 1]
        current_s = c < d or (c == d and successor_s)
        if successor_s and not current_s:
            yield i + 1
        successor_s = current_s


def _compact_sorted_lms(sa_v: memoryview, n: int) -> int:
    """Move surviving entries to the front; position 1 is never LMS."""
    n1 = 0
    for i in range(1, n + 1):
        p = sa_v[i]
        if p > 1:
            n1 += 1
            sa_v[n1] = p
    return n1


def _name_lms_substrings(sa: np.ndarray, s_v: memoryview, n: int, n1: int) -> int:
    """Name the sorted LMS-substrings held in ``sa[1..n1]``.

    The reduced string ends up in ``sa[n - n1 + 1 .. n]`` with names
    ``0..count-1``; the sentinel factor is named 0. Returns ``count``.
    """
    sa[n1 + 1 : n + 1] = EMPTY
    sa_v = memoryview(sa)
    # LMS positions are at least two apart, so p // 2 is a private slot
    next_lms = n
    for p in _iter_lms_desc(s_v, n):
        sa_v[n1 + p // 2] = next_lms - p + 1
        next_lms = p

    name = -1
    prev, prev_len = 0, 0
    for i in range(1, n1 + 1):
        p = sa_v[i]
        length = sa_v[n1 + p // 2]
        if length != prev_len or s_v[p : p + length] != s_v[prev : prev + length]:
            name += 1
            prev, prev_len = p, length
        # shifted by one so that name 0 is not mistaken for EMPTY
        sa_v[n1 + p // 2] = name + 1

    j = n
    for i in range(n, n1, -1):
        v = sa_v[i]
        if v != EMPTY:
            sa_v[j] = v - 1
            j -= 1
    return name + 1


# ---------------------------------------------------------------------------
# Recursive sorter
# ---------------------------------------------------------------------------


@dataclass
class _SortContext:
    arena: WordArena
    scratch: np.ndarray | None = None
    listener: FinalPassListener | None = None
    _offset: int = field(default=1)

    def acquire_cursors(self, level: int, size: int, dtype: np.dtype) -> tuple[np.ndarray, Callable[[], None]]:
        """Cursor storage for a recursion level, from scratch when available."""
        if self.scratch is None:
            cursors = self.arena.allocate(size, dtype, label=f"bucket cursors L{level}", level=level)
            return cursors, lambda: self.arena.release(cursors)
        start = self._offset
        if start + size > len(self.scratch):
            raise RuntimeError(f"scratch exhausted at level {level}: need {size} words at {start}")
        self._offset += size

        def _release() -> None:
            self._offset = start

        return self.scratch[start : start + size], _release


def _sort_lms_substrings(s: np.ndarray, sa: np.ndarray, n: int, bkt: np.ndarray) -> tuple[int, int]:
    """Sort and name the LMS-substrings; returns their number and the name count."""
    s_v, sa_v, b_v = memoryview(s), memoryview(sa), memoryview(bkt)
    sa[1 : n + 1] = EMPTY
    fill_bucket_cursors(s, n, bkt, BucketMode.TAIL)
    for p in _iter_lms_desc(s_v, n):
        c = s_v[p]
        slot = b_v[c]
        sa_v[slot] = p
        b_v[c] = slot - 1
    fill_bucket_cursors(s, n, bkt, BucketMode.HEAD)
    _induce_l(sa, s, n, bkt, None, erase=True)
    fill_bucket_cursors(s, n, bkt, BucketMode.TAIL)
    _induce_s(sa, s, n, bkt, None, erase=True)

    n1 = _compact_sorted_lms(sa_v, n)
    return n1, _name_lms_substrings(sa, s_v, n, n1)


def _rank_unique_names(s1: np.ndarray, sa1: np.ndarray, n1: int) -> None:
    s1_v, sa1_v = memoryview(s1), memoryview(sa1)
    for i in range(1, n1 + 1):
        sa1_v[s1_v[i] + 1] = i


def _place_sorted_lms(s: np.ndarray, sa: np.ndarray, n: int, n1: int, bkt: np.ndarray) -> None:
    """Turn reduced ranks in ``sa[1..n1]`` into LMS positions at their bucket tails."""
    s_v, sa_v, b_v = memoryview(s), memoryview(sa), memoryview(bkt)
    # map reduced ranks back to text positions, reusing the names region
    base = n - n1
    j = n1
    for p in _iter_lms_desc(s_v, n):
        sa_v[base + j] = p
        j -= 1
    for i in range(1, n1 + 1):
        sa_v[i] = sa_v[base + sa_v[i]]
    sa[n1 + 1 : n + 1] = EMPTY

    fill_bucket_cursors(s, n, bkt, BucketMode.TAIL)
    for i in range(n1, 0, -1):
        p = sa_v[i]
        sa_v[i] = EMPTY
        c = s_v[p]
        slot = b_v[c]
        sa_v[slot] = p
        b_v[c] = slot - 1


def _induce_sort(s: np.ndarray, sa: np.ndarray, n: int, k: int, bkt: np.ndarray, ctx: _SortContext, level: int) -> None:
    listener = ctx.listener if level == 0 else None
    if n == 1:
        sa[1] = 1
        if listener is not None:
            listener.start()
            listener(1, 1)
        return

    n1, count = _sort_lms_substrings(s, sa, n, bkt)
    logger.debug("level %d: n=%d lms=%d names=%d", level, n, n1, count)

    # sort the reduced string: names on top, its suffix array at the bottom
    s1 = sa[n - n1 : n + 1]
    sa1 = sa[: n1 + 1]
    if count < n1:
        child, release = ctx.acquire_cursors(level + 1, count, sa.dtype)
        try:
            _induce_sort(s1, sa1, n1, count, child, ctx, level + 1)
        finally:
            release()
    else:
        _rank_unique_names(s1, sa1, n1)

    _place_sorted_lms(s, sa, n, n1, bkt)
    fill_bucket_cursors(s, n, bkt, BucketMode.HEAD)
    _induce_l(sa, s, n, bkt, None)
    fill_bucket_cursors(s, n, bkt, BucketMode.TAIL)
    if listener is not None:
        listener.start()
    _induce_s(sa, s, n, bkt, None, hook=listener)


def sort_suffixes(
    text: Text,
    *,
    arena: WordArena | None = None,
    listener: FinalPassListener | None = None,
    scratch: np.ndarray | None = None,
    buffer: WorkBuffer | None = None,
) -> SuffixArray:
    """Build the suffix array of ``text``.

    Parameters
    ----------
    text:
        Sentinel-terminated input.
    arena:
        Counter charged with the level-0 cursor array (and, without
        ``scratch``, with the cursor arrays of deeper levels).
    listener:
        Notified of every slot read during the last pass at level 0.
    scratch:
        Padded array of at least ``n + 1`` words that is free until the last
        pass begins; deeper levels keep their cursors there.
    buffer:
        Output buffer to fill instead of a fresh one.
    """
    arena = arena if arena is not None else WordArena()
    buf = buffer if buffer is not None else WorkBuffer.new(text.n, arena=arena)
    dtype = buf.slots.dtype
    if scratch is not None and scratch.dtype != dtype:
        raise ValueError(f"scratch dtype {scratch.dtype} differs from buffer dtype {dtype}")
    with arena.borrow(text.sigma, dtype, label="bucket cursors") as cursors:
        _induce_sort(text.symbols, buf.slots, text.n, text.sigma, cursors, _SortContext(arena, scratch, listener), 0)
    return buf.to_suffix_array()
