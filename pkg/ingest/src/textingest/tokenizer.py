"""Sentence segmentation and word/punctuation tokenization.

The rules are deliberately small and frozen (TOKENIZER_VERSION): the
numeric pipeline downstream is sensitive to tokenizer drift, so any
rule change must bump the version and regenerate fixtures.

Tokens come out in source order. Words keep internal apostrophes and
hyphens ("don't", "o'clock", "well-known" are single tokens); numbers
are single tokens; every other visible character becomes a one-char
punctuation token.
"""

from __future__ import annotations

import re

TOKENIZER_VERSION = "regex-1.0"

# Sentence boundary: terminal punctuation (possibly inside a closing
# quote), then whitespace and an upper-case/quote opener. Only the
# whitespace is consumed, so no character is lost to the split.
_SENT_SPLIT = re.compile(
    r"(?:(?<=[.!?])|(?<=[.!?][\"'])|(?<=[.!?]”)|(?<=[.!?]’))"
    r"\s+(?=[\"'(“‘]?[A-Z])"
)

_TOKEN = re.compile(
    r"""
    [A-Za-z]+(?:['’-][A-Za-z]+)*   # word, optional internal ' or -
  | \d+(?:[.,]\d+)*                     # number
  | \S                                  # any other visible char
    """,
    re.VERBOSE,
)


def split_sentences(text: str) -> list[str]:
    """Greedy single-pass sentence segmentation (pinned heuristic)."""
    parts = _SENT_SPLIT.split(text)
    return [p for p in (part.strip() for part in parts) if p]


def tokenize(sentence: str) -> list[str]:
    """Tokens of one sentence, in order."""
    return _TOKEN.findall(sentence)
