"""Corpus BLEU: geometric mean of pooled clipped n-gram precisions
(orders 1-4, unsmoothed) times the corpus brevity penalty, on a 0-100
scale.

Pair statistics are integer counts, so pooling is order-independent and
parallel reduction is bit-identical to sequential reduction.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from ..text import Sentence, ngrams

MAX_ORDER = 4

# (clipped counts per order, candidate totals per order, cand length,
#  closest reference length)
BleuPairStats = tuple[tuple[int, ...], tuple[int, ...], int, int]


def closest_ref_length(cand_len: int, refs: Sequence[Sentence]) -> int:
    """Reference length closest to the candidate's; ties pick the shorter."""
    best = min(refs, key=lambda ref: (abs(len(ref) - cand_len), len(ref)))
    return len(best)


def bleu_pair_statistics(cand: Sentence, refs: Sequence[Sentence]) -> BleuPairStats:
    refs = list(refs)
    if not refs:
        raise ValueError("bleu needs at least one reference per pair")
    clipped = [0] * MAX_ORDER
    totals = [0] * MAX_ORDER
    for i in range(MAX_ORDER):
        n = i + 1
        cand_counts = ngrams(cand, n)
        if not cand_counts:
            continue
        max_ref: dict = {}
        for ref in refs:
            for g, c in ngrams(ref, n).items():
                if c > max_ref.get(g, 0):
                    max_ref[g] = c
        clip = 0
        total = 0
        for g, c in cand_counts.items():
            total += c
            limit = max_ref.get(g, 0)
            clip += c if c < limit else limit
        clipped[i] = clip
        totals[i] = total
    return tuple(clipped), tuple(totals), len(cand), closest_ref_length(len(cand), refs)


def bleu_from_statistics(stats: Iterable[BleuPairStats]) -> float:
    clipped = [0] * MAX_ORDER
    totals = [0] * MAX_ORDER
    cand_len = 0
    ref_len = 0
    empty = True
    for pair_clipped, pair_totals, c_len, r_len in stats:
        empty = False
        for i in range(MAX_ORDER):
            clipped[i] += pair_clipped[i]
            totals[i] += pair_totals[i]
        cand_len += c_len
        ref_len += r_len
    if empty:
        raise ValueError("empty candidate corpus")
    if cand_len == 0:
        return 0.0
    log_sum = 0.0
    for clip, total in zip(clipped, totals):
        # No smoothing: a zero (or undefined) pooled precision zeroes the score.
        if clip == 0 or total == 0:
            return 0.0
        log_sum += math.log(clip / total) / MAX_ORDER
    brevity = min(1.0, math.exp(1.0 - ref_len / cand_len))
    return 100.0 * brevity * math.exp(log_sum)


def bleu_corpus(pairs: Iterable[tuple[Sentence, Sequence[Sentence]]]) -> float:
    """Corpus BLEU over (candidate, references) pairs, in [0, 100]."""
    return bleu_from_statistics(
        bleu_pair_statistics(cand, refs) for cand, refs in pairs
    )
