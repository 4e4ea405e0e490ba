"""Synthetic inputs for runs and benchmarks.

A generator spec reads ``KIND:SIZE[:SEED]``. ``KIND`` is ``bbba``, ``aaab``,
``fib`` or ``rand``; ``rand`` takes an optional alphabet size suffix, as in
``rand16:4096:7`` (default 4 symbols).
"""

from __future__ import annotations

import re

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from lyndon_induce.errors import ErrorCode, LyndonInduceError
from lyndon_induce.options_enum import GeneratorKind
from lyndon_induce.textcore import Text, load_text

DEFAULT_RAND_SIGMA = 4

_SPEC_PATTERN = re.compile(r"^(?P<kind>[a-z]+?)(?P<sigma>\d+)?:(?P<size>\d+)(?::(?P<seed>\d+))?$")


class GeneratorSpec(BaseModel):
    """Validated generator request."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: GeneratorKind
    size: int = Field(ge=1)
    seed: int = Field(default=0, ge=0)
    sigma: int = Field(default=DEFAULT_RAND_SIGMA, ge=1, le=255)

    @model_validator(mode="after")
    def _sigma_only_for_rand(self) -> GeneratorSpec:
        if self.kind is not GeneratorKind.RAND and self.sigma != DEFAULT_RAND_SIGMA:
            raise ValueError(f"alphabet size applies to rand only, not {self.kind}")
        return self

    @classmethod
    def parse(cls, spec: str) -> GeneratorSpec:
        """Parse ``KIND:SIZE[:SEED]``.

        Raises:
            LyndonInduceError: ``BAD_SPEC`` for anything malformed.
        """
        match = _SPEC_PATTERN.match(spec.strip().lower())
        if match is None:
            raise LyndonInduceError(ErrorCode.BAD_SPEC, f"generator spec '{spec}' is not KIND:SIZE[:SEED]")
        try:
            kind = GeneratorKind(match["kind"])
        except ValueError:
            supported = ", ".join(k.value for k in GeneratorKind)
            raise LyndonInduceError(
                ErrorCode.BAD_SPEC, f"unknown generator '{match['kind']}'. Supported: {supported}"
            ) from None
        fields: dict[str, object] = {"kind": kind, "size": int(match["size"])}
        if match["seed"] is not None:
            fields["seed"] = int(match["seed"])
        if match["sigma"] is not None:
            fields["sigma"] = int(match["sigma"])
        try:
            return cls.model_validate(fields)
        except ValueError as exc:
            raise LyndonInduceError(ErrorCode.BAD_SPEC, f"generator spec '{spec}': {exc}") from exc

    def resized(self, size: int) -> GeneratorSpec:
        return self.model_copy(update={"size": size})

    @property
    def name(self) -> str:
        if self.kind is GeneratorKind.RAND:
            return f"rand{self.sigma}:{self.size}:{self.seed}"
        return f"{self.kind}:{self.size}"


def fibonacci_word(size: int) -> bytes:
    """First ``size`` symbols of the word with ``s1 = b``, ``s2 = a``, ``s_k = s_(k-1) s_(k-2)``."""
    older, newer = b"b", b"a"
    while len(newer) < size:
        older, newer = newer, newer + older
    return newer[:size]


def generate_bytes(spec: GeneratorSpec) -> bytes:
    """Raw bytes for ``spec`` (no sentinel)."""
    size = spec.size
    if spec.kind is GeneratorKind.BBBA:
        return b"b" * (size - 1) + b"a"
    if spec.kind is GeneratorKind.AAAB:
        return b"a" * (size - 1) + b"b"
    if spec.kind is GeneratorKind.FIB:
        return fibonacci_word(size)
    rng = np.random.default_rng(spec.seed)
    return rng.integers(1, spec.sigma + 1, size=size, dtype=np.uint8).tobytes()


def generate(spec: GeneratorSpec | str) -> Text:
    """Build the sentinel-terminated text described by ``spec``."""
    if isinstance(spec, str):
        spec = GeneratorSpec.parse(spec)
    return load_text(generate_bytes(spec))
