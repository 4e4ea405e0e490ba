from __future__ import annotations

import io
from typing import TYPE_CHECKING

import numpy as np
import pytest

from lyndon_induce.errors import ErrorCode, LyndonInduceError
from lyndon_induce.serialization import (
    MAGIC,
    choose_width,
    load_binary,
    read_binary,
    read_text,
    save_binary,
    write_binary,
    write_text,
)

if TYPE_CHECKING:
    from pathlib import Path


def test_write_text_single_column() -> None:
    stream = io.StringIO()

    write_text(stream, [np.array([7, 6, 4])])

    assert stream.getvalue() == "7\n6\n4\n"


def test_write_text_two_columns() -> None:
    stream = io.StringIO()

    write_text(stream, [np.array([7, 6]), np.array([1, 2])])

    assert stream.getvalue() == "7\t1\n6\t2\n"
    assert read_text(io.StringIO(stream.getvalue())) == [[7, 6], [1, 2]]


def test_write_text_rejects_ragged_columns() -> None:
    with pytest.raises(ValueError, match="length"):
        write_text(io.StringIO(), [np.array([1, 2]), np.array([1])])


def test_binary_layout() -> None:
    stream = io.BytesIO()

    width = write_binary(stream, np.array([7, 6, 4, 2, 1, 5, 3]))

    data = stream.getvalue()
    assert width == 4
    assert data[:8] == MAGIC
    assert int.from_bytes(data[8:16], "little") == 7
    assert data[16] == 4
    assert len(data) == 17 + 7 * 4
    assert int.from_bytes(data[17:21], "little") == 7


def test_binary_forced_width(tmp_path: Path) -> None:
    path = tmp_path / "sa.bin"

    assert save_binary(path, np.array([3, 1, 2]), width=8) == 8

    assert path.stat().st_size == 17 + 3 * 8
    assert load_binary(path).tolist() == [3, 1, 2]


def test_choose_width() -> None:
    assert choose_width(np.array([1, 2**31 - 1])) == 4
    assert choose_width(np.array([1, 2**31])) == 8
    assert choose_width(np.array([], dtype=np.int64)) == 4


@pytest.mark.parametrize("forced", [3, 16])
def test_choose_width_rejects_unknown_width(forced: int) -> None:
    with pytest.raises(LyndonInduceError) as excinfo:
        choose_width(np.array([1]), forced)
    assert excinfo.value.code is ErrorCode.FLAG_CONFLICT


def test_choose_width_rejects_too_narrow() -> None:
    with pytest.raises(LyndonInduceError, match="does not fit"):
        choose_width(np.array([2**33]), 4)


@pytest.mark.parametrize(
    ("payload", "message"),
    [
        (b"LYN", "truncated"),
        (b"NOTMAGIC" + (1).to_bytes(8, "little") + b"\x04" + b"\x00" * 4, "magic"),
        (MAGIC + (1).to_bytes(8, "little") + b"\x02" + b"\x00" * 2, "width"),
        (MAGIC + (5).to_bytes(8, "little") + b"\x04" + b"\x00" * 4, "short"),
    ],
)
def test_read_binary_rejects_damaged_input(payload: bytes, message: str) -> None:
    with pytest.raises(LyndonInduceError, match=message) as excinfo:
        read_binary(io.BytesIO(payload))
    assert excinfo.value.code is ErrorCode.IO_ERROR
