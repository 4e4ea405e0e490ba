"""Lyndon array computed while the suffix array is induced.

Each variant is a listener on the last right-to-left pass of
:func:`~lyndon_induce.sacak.sort_suffixes`. When suffix ``j`` is read at its
final rank, every suffix starting right of ``j`` that is still unresolved is
larger than ``T_j``, and every resolved one is smaller. So ``LA[j]`` is the
distance from ``j`` to the nearest unresolved position on its right (or to
``n + 1``). The variants differ only in how they find that position.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from lyndon_induce.options_enum import LyndonVariant
from lyndon_induce.oracles import next_smaller_distances
from lyndon_induce.sacak import WorkBuffer, sort_suffixes
from lyndon_induce.textcore import LyndonArray, SuffixArray
from lyndon_induce.workspace import WordArena, WorkspaceUsage

if TYPE_CHECKING:
    from lyndon_induce.textcore import Text

logger = logging.getLogger(__name__)


def _fill_successors(a: np.ndarray, n: int) -> None:
    """``a[i] = i + 1`` for ``i`` in ``1..n`` without a temporary index array."""
    a_v = memoryview(a)
    for i in range(1, n + 1):
        a_v[i] = i + 1


def _fill_predecessors(a: np.ndarray, n: int) -> None:
    """``a[i] = i - 1`` for ``i`` in ``1..n``."""
    a_v = memoryview(a)
    for i in range(1, n + 1):
        a_v[i] = i - 1


def _to_lyndon_array(la: np.ndarray) -> LyndonArray:
    view = la[1:]
    view.flags.writeable = False
    return LyndonArray(entries=view)


class _Inducer:
    """Common state of the induced variants; ``la`` is the padded output buffer."""

    variant: LyndonVariant

    def __init__(self, la: np.ndarray, n: int, arena: WordArena) -> None:
        self.la = la
        self.n = n
        self.arena = arena

    def start(self) -> None:
        self.la[1:] = 0

    def __call__(self, i: int, j: int, /) -> None:
        raise NotImplementedError

    def finish(self) -> LyndonArray:
        return _to_lyndon_array(self.la)


class NaiveInducer(_Inducer):
    """Scan right from ``j`` to the first zero entry.

    Costs ``LA[j]`` steps per read, ``O(n * avelyn)`` overall.
    """

    variant = LyndonVariant.NAIVE

    def start(self) -> None:
        super().start()
        self._la_v = memoryview(self.la)

    def __call__(self, i: int, j: int, /) -> None:
        la, n = self._la_v, self.n
        k = j + 1
        while k <= n and la[k] != 0:
            k += 1
        la[j] = k - j


class NextPrevInducer(_Inducer):
    """Doubly linked list over the unresolved positions, two extra arrays."""

    variant = LyndonVariant.NEXTPREV

    def __init__(self, la: np.ndarray, n: int, arena: WordArena) -> None:
        super().__init__(la, n, arena)
        self.next_links: np.ndarray | None = None
        self.prev_links: np.ndarray | None = None

    def start(self) -> None:
        super().start()
        self.next_links = self.arena.allocate(self.n + 1, self.la.dtype, label="next links")
        self.prev_links = self.arena.allocate(self.n + 1, self.la.dtype, label="prev links")
        _fill_successors(self.next_links, self.n)
        _fill_predecessors(self.prev_links, self.n)
        self._next_v = memoryview(self.next_links)
        self._prev_v = memoryview(self.prev_links)
        self._la_v = memoryview(self.la)

    def __call__(self, i: int, j: int, /) -> None:
        nxt, prv = self._next_v[j], self._prev_v[j]
        self._la_v[j] = nxt - j
        if prv > 0:
            self._next_v[prv] = nxt
        if nxt <= self.n:
            self._prev_v[nxt] = prv

    def finish(self) -> LyndonArray:
        for links in (self.next_links, self.prev_links):
            if links is not None:
                self.arena.release(links)
        self.next_links = self.prev_links = None
        return super().finish()


class SingleAuxInducer(_Inducer):
    """One auxiliary array holding NEXT for unresolved slots.

    Once ``j`` is resolved, ``A[j]`` is free and stores PREV of ``j + 1``.
    """

    variant = LyndonVariant.SINGLEAUX

    def __init__(self, la: np.ndarray, n: int, arena: WordArena) -> None:
        super().__init__(la, n, arena)
        self.links: np.ndarray | None = None

    def start(self) -> None:
        super().start()
        self.links = self.arena.allocate(self.n + 1, self.la.dtype, label="links")
        _fill_successors(self.links, self.n)
        self._a_v = memoryview(self.links)
        self._la_v = memoryview(self.la)

    def __call__(self, i: int, j: int, /) -> None:
        a, la = self._a_v, self._la_v
        if j == 1:
            prv = 0
        else:
            prv = j - 1 if la[j - 1] == 0 else a[j - 1]
        nxt = a[j]
        la[j] = nxt - j
        if prv > 0:
            a[prv] = nxt
        if nxt <= self.n:
            a[nxt - 1] = prv

    def finish(self) -> LyndonArray:
        if self.links is not None:
            self.arena.release(self.links)
            self.links = None
        return super().finish()


class InPlaceInducer(_Inducer):
    """Links kept in the output buffer itself.

    An unresolved slot ``k`` holds NEXT (``> k``). A resolved slot holds PREV
    of its right neighbour (``< k``) when it is the rightmost slot of its
    resolved block, or a stale value nobody reads. L-type positions resolve
    with ``LA = 1`` and S-type ones keep their NEXT value, so the final
    lengths are recovered by :func:`finalize_inplace`.
    """

    variant = LyndonVariant.INPLACE

    def start(self) -> None:
        _fill_successors(self.la, self.n)
        self._a_v = memoryview(self.la)

    def __call__(self, i: int, j: int, /) -> None:
        a = self._a_v
        if j == 1:
            prv = 0
        else:
            left = a[j - 1]
            # j - 1 unresolved iff its slot still points at j
            prv = j - 1 if left >= j else left
        nxt = a[j]
        assert nxt > j, f"slot {j} read as NEXT but holds {nxt}"
        if prv > 0:
            assert a[prv] > prv, f"slot {prv} read as NEXT but holds {a[prv]}"
            a[prv] = nxt
        if nxt <= self.n:
            a[nxt - 1] = prv

    def finish(self) -> LyndonArray:
        return finalize_inplace(FusedArray(self.la))


@dataclass(frozen=True, eq=False)
class FusedArray:
    """Padded buffer holding NEXT/PREV links before finalization."""

    slots: np.ndarray

    @classmethod
    def from_values(cls, values: list[int]) -> FusedArray:
        slots = np.zeros(len(values) + 1, dtype=np.int64)
        slots[1:] = values
        return cls(slots)


def finalize_inplace(buf: FusedArray) -> LyndonArray:
    """Rewrite links as lengths in place: 1 where ``A[j] < j``, else ``A[j] - j``."""
    a = buf.slots
    a_v = memoryview(a)
    for j in range(1, len(a)):
        link = a_v[j]
        a_v[j] = 1 if link < j else link - j
    return _to_lyndon_array(a)


_INDUCERS: dict[LyndonVariant, type[_Inducer]] = {
    LyndonVariant.NAIVE: NaiveInducer,
    LyndonVariant.NEXTPREV: NextPrevInducer,
    LyndonVariant.SINGLEAUX: SingleAuxInducer,
    LyndonVariant.INPLACE: InPlaceInducer,
}


@dataclass(frozen=True, eq=False)
class InducedArrays:
    """Outputs of one run plus its workspace figures."""

    la: LyndonArray
    sa: SuffixArray | None
    usage: WorkspaceUsage
    nsv_max_stack_depth: int | None = None


def induce_lyndon(
    text: Text,
    variant: LyndonVariant = LyndonVariant.INPLACE,
    *,
    arena: WordArena | None = None,
    keep_sa: bool = True,
    wide: bool = False,
) -> InducedArrays:
    """Compute the Lyndon array of ``text`` together with its suffix array.

    Args:
        text: Sentinel-terminated input.
        variant: How the Lyndon array is obtained.
        arena: Workspace counter; a fresh one is used when omitted.
        keep_sa: When false the suffix array buffer is counted as working
            space and dropped after the last pass.
        wide: Force 64-bit index arrays.

    Returns:
        The arrays and the peak working space observed by ``arena``.
    """
    if variant is LyndonVariant.SA_ONLY:
        raise ValueError("sa-only produces no Lyndon array; call sort_suffixes instead")
    arena = arena if arena is not None else WordArena()
    n = text.n
    buf = WorkBuffer.new(n, arena=arena, charged=not keep_sa, wide=wide)
    depth: int | None = None
    if variant is LyndonVariant.NSV_ISA:
        sa = sort_suffixes(text, arena=arena, buffer=buf)
        la, depth = _lyndon_from_inverse(sa, arena)
    else:
        la_buf = arena.output(n + 1, buf.slots.dtype, label="lyndon array")
        inducer = _INDUCERS[variant](la_buf, n, arena)
        sa = sort_suffixes(text, arena=arena, listener=inducer, scratch=la_buf, buffer=buf)
        la = inducer.finish()
    if not keep_sa:
        arena.release(buf.slots)
    logger.debug("%s: n=%d peak=%d words", variant, n, arena.peak_words)
    return InducedArrays(la=la, sa=sa if keep_sa else None, usage=arena.usage(), nsv_max_stack_depth=depth)


def _lyndon_from_inverse(sa: SuffixArray, arena: WordArena) -> tuple[LyndonArray, int]:
    """Lyndon array as next-smaller-value distances over the inverse suffix array."""
    n = len(sa)
    dtype = sa.entries.dtype
    la = arena.output(n + 1, dtype, label="lyndon array")
    with arena.borrow(n + 1, dtype, label="inverse suffix array") as isa:
        isa_v = memoryview(isa)
        for rank, position in enumerate(memoryview(sa.entries), start=1):
            isa_v[position] = rank
        depth = next_smaller_distances(isa, la)
        arena.charge(depth, label="nsv stack")
    return _to_lyndon_array(la), depth


def lyndon_array(
    text: Text, variant: LyndonVariant = LyndonVariant.INPLACE, *, arena: WordArena | None = None
) -> LyndonArray:
    """Lyndon array alone; the suffix array buffer is treated as working space."""
    return induce_lyndon(text, variant, arena=arena, keep_sa=False).la


def la_naive(text: Text, *, arena: WordArena | None = None) -> LyndonArray:
    return induce_lyndon(text, LyndonVariant.NAIVE, arena=arena).la


def la_nextprev(text: Text, *, arena: WordArena | None = None) -> LyndonArray:
    return induce_lyndon(text, LyndonVariant.NEXTPREV, arena=arena).la


def la_singleaux(text: Text, *, arena: WordArena | None = None) -> LyndonArray:
    return induce_lyndon(text, LyndonVariant.SINGLEAUX, arena=arena).la


def la_inplace(text: Text, *, arena: WordArena | None = None) -> LyndonArray:
    return induce_lyndon(text, LyndonVariant.INPLACE, arena=arena).la
