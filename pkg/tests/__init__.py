"""Tests suite for `lyndon_induce`."""

from pathlib import Path

TESTS_DIR = Path(__file__).parent
FIXTURES_DIR = TESTS_DIR / "fixtures"

# Interpreter objects live during a traced run (array views, memoryviews,
# frames of the recursive sorter) on top of the arrays being measured.
OBJECT_SLACK_WORDS = 4096
