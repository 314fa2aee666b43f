"""ROUGE-N (clipped n-gram recall) and ROUGE-L (LCS F-measure).

Multi-reference scores take the maximum over the single-reference scores.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..text import Sentence, lcs_length, ngrams


@dataclass(frozen=True)
class RougeLConfig:
    """F-measure weighting for ROUGE-L; f_beta weights recall vs precision."""

    f_beta: float = 1.0

    def __post_init__(self) -> None:
        if self.f_beta <= 0:
            raise ValueError("f_beta must be positive")


DEFAULT_ROUGE_L = RougeLConfig()


def rouge_n(cand: Sentence, refs: Sequence[Sentence], n: int) -> float:
    """Clipped n-gram recall of the references in the candidate, in [0, 1].

    Per reference: sum over n-grams of min(candidate count, reference count)
    divided by the reference n-gram total. A reference shorter than ``n``
    scores 0; the result is the maximum over references.
    """
    if n < 1:
        raise ValueError("n-gram order must be >= 1")
    refs = list(refs)
    if not refs:
        raise ValueError("rouge_n needs at least one reference")
    cand_counts = ngrams(cand, n)
    best = 0.0
    for ref in refs:
        total = len(ref) - n + 1
        if total < 1:
            continue
        matched = sum(
            min(c, cand_counts[g]) for g, c in ngrams(ref, n).items() if g in cand_counts
        )
        score = matched / total
        if score > best:
            best = score
    return best


def rouge_l(
    cand: Sentence, refs: Sequence[Sentence], cfg: RougeLConfig = DEFAULT_ROUGE_L
) -> float:
    """LCS F-measure in [0, 1], maximum over references.

    F = (1 + b^2) * R * P / (R + b^2 * P) with R = LCS/len(ref) and
    P = LCS/len(cand). Pairs without a common subsequence (including
    empty sentences) score 0.
    """
    refs = list(refs)
    if not refs:
        raise ValueError("rouge_l needs at least one reference")
    b2 = cfg.f_beta * cfg.f_beta
    best = 0.0
    for ref in refs:
        common = lcs_length(cand, ref)
        if common == 0:
            continue
        recall = common / len(ref)
        precision = common / len(cand)
        score = (1.0 + b2) * recall * precision / (recall + b2 * precision)
        if score > best:
            best = score
    return best
