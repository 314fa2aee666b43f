"""PINC lexical dissimilarity: mean over n-gram orders of the fraction of
candidate n-grams not shared with the source (distinct n-grams, unclipped).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..text import Sentence


@dataclass(frozen=True)
class PincConfig:
    max_n: int = 4
    empty_order_mode: str = "skip"

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")
        if self.empty_order_mode not in ("skip", "zero"):
            raise ValueError(f"unknown empty_order_mode: {self.empty_order_mode!r}")


DEFAULT_PINC = PincConfig()


def _distinct_ngrams(s: Sentence, n: int) -> set:
    return {s[i : i + n] for i in range(len(s) - n + 1)}


def pinc(src: Sentence, cand: Sentence, cfg: PincConfig = DEFAULT_PINC) -> float:
    if not cand:
        raise ValueError("pinc is undefined for an empty candidate")
    terms = []
    for n in range(1, cfg.max_n + 1):
        cand_grams = _distinct_ngrams(cand, n)
        if not cand_grams:
            if cfg.empty_order_mode == "zero":
                terms.append(0.0)
            continue
        shared = len(cand_grams & _distinct_ngrams(src, n))
        terms.append(1.0 - shared / len(cand_grams))
    return sum(terms) / len(terms)
