"""Option enumerations surfaced by the configuration and the CLI."""

from __future__ import annotations

from enum import StrEnum


class LyndonVariant(StrEnum):
    """Ways of producing the Lyndon array.

    NAIVE      -- scan right from each read position up to the first unset entry.
    NEXTPREV   -- two linked-list arrays, 2n extra words.
    SINGLEAUX  -- one auxiliary array, n extra words.
    INPLACE    -- links kept inside the output buffer, no extra array.
    NSV_ISA    -- inverse suffix array plus a next-smaller-value stack.
    SA_ONLY    -- suffix array alone, used as the bench baseline.
    """

    NAIVE = "naive"
    NEXTPREV = "nextprev"
    SINGLEAUX = "singleaux"
    INPLACE = "inplace"
    NSV_ISA = "nsv-isa"
    SA_ONLY = "sa-only"

    @classmethod
    def from_str(cls, value: str) -> LyndonVariant:
        """Case-insensitive lookup by value string."""
        normalized = value.lower().strip()
        for member in cls:
            if member.value == normalized:
                return member
        supported = ", ".join(m.value for m in cls)
        raise ValueError(f"Unsupported variant '{value}'. Supported: {supported}")


class EmitKind(StrEnum):
    """Arrays written by a run."""

    SA = "sa"
    LA = "la"
    BOTH = "both"

    @property
    def wants_sa(self) -> bool:
        return self is not EmitKind.LA

    @property
    def wants_la(self) -> bool:
        return self is not EmitKind.SA


class OutputFormat(StrEnum):
    """Serialization format of emitted arrays."""

    TEXT = "text"
    BINARY = "binary"


class CheckStatus(StrEnum):
    """Outcome of the oracle comparison."""

    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


class GeneratorKind(StrEnum):
    """Synthetic input families.

    BBBA -- ``b^(size-1) a``: every position L-type, worst case for the NSV stack.
    AAAB -- ``a^(size-1) b``: one long Lyndon word, average LA near n/2.
    FIB  -- prefix of the Fibonacci word, highly repetitive.
    RAND -- uniform i.i.d. symbols over a chosen alphabet size.
    """

    BBBA = "bbba"
    AAAB = "aaab"
    FIB = "fib"
    RAND = "rand"
