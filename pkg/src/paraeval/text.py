"""Tokenization and the sequence kernels every metric builds on.

A sentence is a plain tuple of normalized tokens. All functions here are
pure and safe to call from any number of threads or processes.
"""

from __future__ import annotations

import re
import unicodedata
from collections import Counter
from dataclasses import dataclass

Sentence = tuple[str, ...]

# Maximal runs of word characters, or maximal runs of punctuation/symbols.
# Whitespace never appears inside a token.
_TOKEN_RE = re.compile(r"\w+|[^\w\s]+")
_PUNCT_RE = re.compile(r"[^\w\s]+")


@dataclass(frozen=True)
class TokenizerConfig:
    """Normalization rules applied before any metric sees the text.

    punctuation_mode "strip" separates punctuation runs from words and
    drops them; "keep-as-token" keeps each run as its own token.
    """

    lowercase: bool = True
    punctuation_mode: str = "strip"
    unicode_normalize: bool = True

    def __post_init__(self) -> None:
        if self.punctuation_mode not in ("strip", "keep-as-token"):
            raise ValueError(f"unknown punctuation_mode: {self.punctuation_mode!r}")


DEFAULT_TOKENIZER = TokenizerConfig()


def tokenize(raw: str, config: TokenizerConfig = DEFAULT_TOKENIZER) -> Sentence:
    """Turn raw text into a normalized token tuple. Empty text gives ()."""
    text = unicodedata.normalize("NFC", raw) if config.unicode_normalize else raw
    if config.lowercase:
        text = text.lower()
    pieces = _TOKEN_RE.findall(text)
    if config.punctuation_mode == "strip":
        pieces = [p for p in pieces if not _PUNCT_RE.fullmatch(p)]
    return tuple(pieces)


def ngrams(s: Sentence, n: int) -> Counter:
    """Multiset of all contiguous n-token windows of ``s``.

    Empty when the sentence is shorter than ``n``; counts always sum to
    max(0, len(s) - n + 1).
    """
    if n < 1:
        raise ValueError("n-gram order must be >= 1")
    return Counter(s[i : i + n] for i in range(len(s) - n + 1))


def lcs_length(a: Sentence, b: Sentence) -> int:
    """Length of the longest common subsequence of two token sequences.

    Classic O(len(a) * len(b)) dynamic program over tokens; symmetric in
    its arguments and bounded by min(len(a), len(b)).
    """
    if not a or not b:
        return 0
    if len(b) > len(a):
        a, b = b, a
    row = [0] * (len(b) + 1)
    for x in a:
        diag = 0
        for j, y in enumerate(b, 1):
            tmp = row[j]
            if x == y:
                row[j] = diag + 1
            elif row[j - 1] > row[j]:
                row[j] = row[j - 1]
            diag = tmp
    return row[-1]
