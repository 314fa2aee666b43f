"""Candidate selection: pick one generation out of many by a weighted
harmonic mean of adequacy (srcROUGE_1) and novelty (1 - srcROUGE_L).

The weight w trades adequacy against novelty (higher w favors adequacy).
An optional window on srcROUGE_L filters candidates before ranking; when
every candidate is filtered the window is ignored so a selection is
always produced. Exact parrots have zero novelty and therefore score 0,
so they can never beat a candidate with positive score.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .metrics.rouge import RougeLConfig, rouge_l, rouge_n
from .text import Sentence

_SRC_ROUGE_L = RougeLConfig(f_beta=1.0)


@dataclass(frozen=True)
class SelectionConfig:
    w: float = 1.5
    rl_lower: float = 0.0
    rl_upper: float = 1.0
    apply_length_penalty: bool = True

    def __post_init__(self) -> None:
        if self.w <= 0:
            raise ValueError("w must be positive")
        if not 0.0 <= self.rl_lower <= self.rl_upper <= 1.0:
            raise ValueError("need 0 <= rl_lower <= rl_upper <= 1")


DEFAULT_SELECTION = SelectionConfig()


@dataclass(frozen=True)
class SelectionResult:
    chosen_index: int
    scores: tuple[float, ...]
    filtered: tuple[bool, ...]
    used_fallback: bool = False


def score_from_components(
    src_r1: float,
    src_rl: float,
    cand_len: int,
    src_len: int,
    cfg: SelectionConfig = DEFAULT_SELECTION,
) -> float:
    novelty = 1.0 - src_rl
    denom = src_r1 + novelty * cfg.w
    if denom == 0.0:
        return 0.0
    score = src_r1 * novelty * cfg.w / denom
    if cfg.apply_length_penalty and cand_len > 0:
        # Penalize candidates shorter than the source, brevity-penalty style.
        score *= min(1.0, math.exp(1.0 - src_len / cand_len))
    return score


def selection_score(
    cand: Sentence, src: Sentence, cfg: SelectionConfig = DEFAULT_SELECTION
) -> float:
    """Selection score >= 0; empty candidates score 0."""
    if not src:
        raise ValueError("source sentence must be non-empty")
    if not cand:
        return 0.0
    src_r1 = rouge_n(cand, [src], 1)
    src_rl = rouge_l(cand, [src], _SRC_ROUGE_L)
    return score_from_components(src_r1, src_rl, len(cand), len(src), cfg)


def select_best(
    candidates: Sequence[Sentence],
    src: Sentence,
    cfg: SelectionConfig = DEFAULT_SELECTION,
) -> SelectionResult:
    """Highest-scoring candidate inside the srcROUGE_L window.

    Ties break toward the lowest index. If the window filters everything,
    the raw maximum wins and the result is flagged as a fallback.
    """
    candidates = list(candidates)
    if not candidates:
        raise ValueError("select_best needs at least one candidate")
    if not src:
        raise ValueError("source sentence must be non-empty")
    scores = []
    filtered = []
    for cand in candidates:
        src_rl = rouge_l(cand, [src], _SRC_ROUGE_L) if cand else 0.0
        src_r1 = rouge_n(cand, [src], 1) if cand else 0.0
        scores.append(score_from_components(src_r1, src_rl, len(cand), len(src), cfg))
        filtered.append(not cfg.rl_lower <= src_rl <= cfg.rl_upper)
    pool = [i for i, out in enumerate(filtered) if not out]
    used_fallback = not pool
    if used_fallback:
        pool = list(range(len(candidates)))
    best = pool[0]
    for i in pool[1:]:
        if scores[i] > scores[best]:
            best = i
    return SelectionResult(
        chosen_index=best,
        scores=tuple(scores),
        filtered=tuple(filtered),
        used_fallback=used_fallback,
    )
