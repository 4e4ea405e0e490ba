"""lyndon-induce package.

Suffix array and Lyndon array of a byte string in one induced-sorting pass.
"""

from __future__ import annotations

from lyndon_induce.config import RunConfig
from lyndon_induce.errors import ErrorCode, LyndonInduceError
from lyndon_induce.lyndon import (
    InducedArrays,
    finalize_inplace,
    induce_lyndon,
    la_inplace,
    la_naive,
    la_nextprev,
    la_singleaux,
    lyndon_array,
)
from lyndon_induce.options_enum import LyndonVariant
from lyndon_induce.sacak import sort_suffixes
from lyndon_induce.textcore import LyndonArray, SuffixArray, Text, classify, load_text
from lyndon_induce.workspace import WordArena, traced

__all__ = [
    "ErrorCode",
    "InducedArrays",
    "LyndonArray",
    "LyndonInduceError",
    "LyndonVariant",
    "RunConfig",
    "SuffixArray",
    "Text",
    "WordArena",
    "classify",
    "finalize_inplace",
    "induce_lyndon",
    "la_inplace",
    "la_naive",
    "la_nextprev",
    "la_singleaux",
    "load_text",
    "lyndon_array",
    "sort_suffixes",
    "traced",
]
