"""Reading and writing index arrays.

Text format: one 1-based integer per line; two arrays side by side are
tab-separated. Binary format: the 8-byte magic ``LYNIDX01``, the entry count
as an 8-byte little-endian integer, one byte giving the entry width (4 or 8),
then the entries as little-endian signed integers of that width.
"""

from __future__ import annotations

import struct
from typing import TYPE_CHECKING, BinaryIO, TextIO

import numpy as np

from lyndon_induce.errors import ErrorCode, LyndonInduceError

if TYPE_CHECKING:
    from collections.abc import Sequence
    from pathlib import Path

MAGIC = b"LYNIDX01"
_HEADER = struct.Struct("<8sQB")
_DTYPES = {4: np.dtype("<i4"), 8: np.dtype("<i8")}
_PER_WRITE = 1 << 16


def choose_width(values: np.ndarray, forced: int | None = None) -> int:
    """4 bytes when every value fits, else 8; ``forced`` overrides if it can hold them."""
    largest = int(values.max()) if values.size else 0
    needed = 4 if largest <= np.iinfo(np.int32).max else 8
    if forced is None:
        return needed
    if forced not in _DTYPES:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, f"width must be 4 or 8, got {forced}")
    if forced < needed:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, f"value {largest} does not fit in {forced} bytes")
    return forced


def write_text(stream: TextIO, columns: Sequence[np.ndarray]) -> None:
    """Write one line per position, columns separated by tabs."""
    if not columns:
        return
    n = len(columns[0])
    if any(len(column) != n for column in columns):
        raise ValueError("columns differ in length")
    for start in range(0, n, _PER_WRITE):
        rows = zip(*(column[start : start + _PER_WRITE].tolist() for column in columns), strict=True)
        stream.write("".join("\t".join(map(str, row)) + "\n" for row in rows))


def read_text(stream: TextIO) -> list[list[int]]:
    """Parse text output back into columns."""
    rows = [line.split("\t") for line in stream.read().splitlines() if line.strip()]
    if not rows:
        return []
    return [[int(row[k]) for row in rows] for k in range(len(rows[0]))]


def write_binary(stream: BinaryIO, values: np.ndarray, *, width: int | None = None) -> int:
    """Write ``values`` with a header; returns the width used."""
    width = choose_width(values, width)
    stream.write(_HEADER.pack(MAGIC, len(values), width))
    stream.write(np.ascontiguousarray(values, dtype=_DTYPES[width]).tobytes())
    return width


def read_binary(stream: BinaryIO) -> np.ndarray:
    """Read an array written by :func:`write_binary`."""
    header = stream.read(_HEADER.size)
    if len(header) != _HEADER.size:
        raise LyndonInduceError(ErrorCode.IO_ERROR, "truncated header")
    magic, count, width = _HEADER.unpack(header)
    if magic != MAGIC:
        raise LyndonInduceError(ErrorCode.IO_ERROR, f"bad magic {magic!r}")
    if width not in _DTYPES:
        raise LyndonInduceError(ErrorCode.IO_ERROR, f"unsupported entry width {width}")
    payload = stream.read(count * width)
    if len(payload) != count * width:
        raise LyndonInduceError(ErrorCode.IO_ERROR, f"expected {count} entries, file is short")
    return np.frombuffer(payload, dtype=_DTYPES[width]).astype(np.int64)


def save_binary(path: Path, values: np.ndarray, *, width: int | None = None) -> int:
    with open(path, "wb") as f:
        return write_binary(f, values, width=width)


def load_binary(path: Path) -> np.ndarray:
    with open(path, "rb") as f:
        return read_binary(f)
