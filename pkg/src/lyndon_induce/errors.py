"""Error codes shared by the library and the command line."""

from __future__ import annotations

from enum import StrEnum


class ErrorCode(StrEnum):
    """Machine-readable failure categories."""

    EMPTY_INPUT = "EMPTY_INPUT"
    SENTINEL_IN_INPUT = "SENTINEL_IN_INPUT"
    MALFORMED_PERMUTATION = "MALFORMED_PERMUTATION"
    BAD_SPEC = "BAD_SPEC"
    IO_ERROR = "IO_ERROR"
    CHECK_FAILED = "CHECK_FAILED"
    FLAG_CONFLICT = "FLAG_CONFLICT"

    @property
    def exit_code(self) -> int:
        """Process exit status used by the CLI for this code."""
        if self is ErrorCode.IO_ERROR:
            return 2
        if self is ErrorCode.CHECK_FAILED:
            return 3
        return 1


class LyndonInduceError(ValueError):
    """Raised for every expected failure, tagged with an :class:`ErrorCode`."""

    def __init__(self, code: ErrorCode, message: str) -> None:
        super().__init__(f"{code}: {message}")
        self.code = code
