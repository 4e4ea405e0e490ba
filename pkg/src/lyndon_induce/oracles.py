"""Slow reference implementations taken straight from the definitions.

Used by the test suite and by ``--check``; none of them is meant to be fast.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from lyndon_induce.errors import ErrorCode, LyndonInduceError
from lyndon_induce.options_enum import CheckStatus
from lyndon_induce.sacak import sort_suffixes
from lyndon_induce.textcore import InverseSuffixArray, LyndonArray, SuffixArray, Text, classify

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class NsvResult:
    """Next smaller value of every position (``n + 1`` when none follows)."""

    nsv: np.ndarray
    max_stack_depth: int

    def tolist(self) -> list[int]:
        return [int(v) for v in self.nsv]


def is_lyndon(factor: Sequence[int] | bytes) -> bool:
    """True iff ``factor`` is strictly smaller than each of its proper rotations."""
    word = tuple(factor)
    if not word:
        raise ValueError("a Lyndon word is nonempty")
    return all(word < word[k:] + word[:k] for k in range(1, len(word)))


def la_bruteforce(text: Text) -> LyndonArray:
    """Longest Lyndon prefix of every suffix by testing every length."""
    n = text.n
    values = []
    for i in range(1, n + 1):
        best = 1
        for length in range(2, n - i + 2):
            if is_lyndon(text.factor(i, length)):
                best = length
        values.append(best)
    return LyndonArray.from_values(values)


def sa_naive(text: Text) -> SuffixArray:
    """Positions sorted by comparing whole suffixes."""
    return SuffixArray.from_values(sorted(range(1, text.n + 1), key=text.suffix))


def isa_from_sa(sa: SuffixArray | Sequence[int]) -> InverseSuffixArray:
    """Invert a permutation of ``1..n``.

    Raises:
        LyndonInduceError: ``MALFORMED_PERMUTATION`` on out-of-range or
            repeated entries.
    """
    values = list(sa)
    n = len(values)
    inverse = [0] * (n + 1)
    for rank, position in enumerate(values, start=1):
        if not 1 <= position <= n:
            raise LyndonInduceError(ErrorCode.MALFORMED_PERMUTATION, f"entry {position} outside 1..{n}")
        if inverse[position]:
            raise LyndonInduceError(ErrorCode.MALFORMED_PERMUTATION, f"entry {position} repeated")
        inverse[position] = rank
    return InverseSuffixArray.from_values(inverse[1:])


def next_smaller_distances(values: np.ndarray, out: np.ndarray) -> int:
    """Write ``NSV[i] - i`` for the padded ``values[1..n]`` into ``out[1..n]``.

    Scans right to left over a stack of candidate positions and returns the
    largest stack size reached. Nothing but the stack is allocated.
    """
    v, o = memoryview(values), memoryview(out)
    n = len(v) - 1
    stack: list[int] = []
    depth = 0
    for i in range(n, 0, -1):
        current = v[i]
        while stack and v[stack[-1]] >= current:
            stack.pop()
        o[i] = (stack[-1] if stack else n + 1) - i
        stack.append(i)
        depth = max(depth, len(stack))
    return depth


def nsv(array: Sequence[int] | np.ndarray) -> NsvResult:
    """Next smaller values by a right-to-left scan over a stack of candidates."""
    n = len(array)
    values = np.zeros(n + 1, dtype=np.int64)
    values[1:] = array
    distances = np.zeros(n + 1, dtype=np.int64)
    depth = next_smaller_distances(values, distances)
    return NsvResult(nsv=distances[1:] + np.arange(1, n + 1), max_stack_depth=depth)


def la_from_nsv(isa: InverseSuffixArray) -> LyndonArray:
    """``LA[i] = NSV[i] - i`` over the inverse suffix array."""
    scan = nsv(isa.entries)
    return LyndonArray.from_values(int(v) - i for i, v in enumerate(scan.nsv, start=1))


@dataclass(frozen=True)
class CheckLimits:
    """Largest ``n`` for each oracle path."""

    brute_force_max_n: int = 64
    naive_sa_max_n: int = 2048
    nsv_max_n: int = 1_000_000


def compare_with_oracles(
    text: Text,
    sa: SuffixArray | None,
    la: LyndonArray | None,
    limits: CheckLimits | None = None,
) -> CheckStatus:
    """Compare computed arrays with every reference path allowed by ``limits``.

    Returns ``SKIPPED`` when the text is too long for all of them.
    """
    limits = limits or CheckLimits()
    n = text.n
    ran = False
    if sa is not None and n <= limits.naive_sa_max_n:
        ran = True
        if sa != sa_naive(text):
            logger.error("suffix array differs from the naive sort")
            return CheckStatus.FAIL
    if la is not None:
        is_l = ~classify(text).is_s[1:]
        is_l[-1] = True
        ran = True
        if not np.array_equal(la.entries == 1, is_l):
            logger.error("LA[i] = 1 does not match the L-type positions")
            return CheckStatus.FAIL
        if n <= limits.brute_force_max_n and la != la_bruteforce(text):
            logger.error("Lyndon array differs from the brute-force definition")
            return CheckStatus.FAIL
        if n <= limits.nsv_max_n:
            reference_sa = sa if sa is not None else sort_suffixes(text)
            if la != la_from_nsv(isa_from_sa(reference_sa)):
                logger.error("Lyndon array differs from next smaller values of the inverse suffix array")
                return CheckStatus.FAIL
    return CheckStatus.PASS if ran else CheckStatus.SKIPPED
