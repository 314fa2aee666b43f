"""Lightweight METEOR: staged one-to-one unigram alignment (exact match,
then Porter-stem match), harmonic-mean score with a fragmentation penalty.

No synonymy stage: that would need an external lexical database. The
aligner resolves ambiguous matches left to right, preferring the
reference position that continues the current chunk, so the chunk count
is greedily minimized among maximum-cardinality alignments.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..stem import porter_stem
from ..text import Sentence

_STAGE_KEYS = {
    "exact": lambda token: token,
    "stem": porter_stem,
}


@dataclass(frozen=True)
class MeteorConfig:
    alpha: float = 0.9
    pen_weight: float = 0.5
    pen_exp: float = 3.0
    stages: tuple[str, ...] = ("exact", "stem")

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must lie in (0, 1)")
        if not 0.0 <= self.pen_weight <= 1.0:
            raise ValueError("pen_weight must lie in [0, 1]")
        for stage in self.stages:
            if stage not in _STAGE_KEYS:
                raise ValueError(f"unknown alignment stage: {stage!r}")


DEFAULT_METEOR = MeteorConfig()


def _align(cand: Sentence, ref: Sentence, stages: Sequence[str]) -> list[tuple[int, int]]:
    """One-to-one (cand index, ref index) matches across alignment stages."""
    cand_match = [-1] * len(cand)
    ref_taken = [False] * len(ref)
    for stage in stages:
        key = _STAGE_KEYS[stage]
        available: dict[str, list[int]] = {}
        for j, token in enumerate(ref):
            if not ref_taken[j]:
                available.setdefault(key(token), []).append(j)
        prev_ref = -2
        for i, token in enumerate(cand):
            if cand_match[i] != -1:
                prev_ref = cand_match[i]
                continue
            positions = available.get(key(token))
            if not positions:
                continue
            follow = prev_ref + 1
            if follow in positions:
                choice = follow
            else:
                choice = positions[0]
            positions.remove(choice)
            ref_taken[choice] = True
            cand_match[i] = choice
            prev_ref = choice
    return [(i, j) for i, j in enumerate(cand_match) if j != -1]


def _count_chunks(pairs: list[tuple[int, int]]) -> int:
    chunks = 0
    prev_i = prev_j = -2
    for i, j in pairs:
        if i != prev_i + 1 or j != prev_j + 1:
            chunks += 1
        prev_i, prev_j = i, j
    return chunks


def _score_single(cand: Sentence, ref: Sentence, cfg: MeteorConfig) -> float:
    pairs = sorted(_align(cand, ref, cfg.stages))
    mapped = len(pairs)
    if mapped == 0:
        return 0.0
    precision = mapped / len(cand)
    recall = mapped / len(ref)
    f_mean = precision * recall / (cfg.alpha * precision + (1.0 - cfg.alpha) * recall)
    penalty = cfg.pen_weight * (_count_chunks(pairs) / mapped) ** cfg.pen_exp
    return (1.0 - penalty) * f_mean


def meteor_lite(
    cand: Sentence, refs: Sequence[Sentence], cfg: MeteorConfig = DEFAULT_METEOR
) -> float:
    """Alignment-based score in [0, 1]; maximum over references."""
    refs = list(refs)
    if not refs:
        raise ValueError("meteor needs at least one reference")
    return max(_score_single(cand, ref, cfg) for ref in refs)
