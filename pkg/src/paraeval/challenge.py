"""Deterministic adversarial candidates that expose metric failure modes.

Each perturbation rewrites the source into a candidate with a known
geometry: parrots keep full overlap, reversals keep the vocabulary but
destroy order, shuffles jumble order, truncation keeps a meaning-bearing
prefix. Because the transforms are exact, the resulting metric contrasts
are assertable properties rather than model-dependent observations.

Every transform is a pure function of (sentence, perturbation): seeded
randomness is derived from the perturbation seed and the sentence
content, never from shared state.
"""

from __future__ import annotations

import math
import random
import zlib
from collections.abc import Sequence
from dataclasses import dataclass, replace

from .corpus import Corpus, EvalConfig, DEFAULT_EVAL, evaluate_pairs
from .rouge_p import Benchmark, compute_benchmark
from .text import Sentence

KINDS = ("parrot", "near_parrot", "reverse", "shuffle", "truncate")


@dataclass(frozen=True)
class Perturbation:
    kind: str
    ratio: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown perturbation kind: {self.kind!r}")
        if not 0.0 < self.ratio <= 1.0:
            raise ValueError("ratio must lie in (0, 1]")


def _rng(src: Sentence, p: Perturbation) -> random.Random:
    content = zlib.crc32(" ".join(src).encode("utf-8"))
    return random.Random((p.seed & 0xFFFFFFFF) << 32 | content)


def perturb(src: Sentence, p: Perturbation) -> Sentence:
    if not src:
        raise ValueError("cannot perturb an empty sentence")
    if p.kind == "parrot":
        return tuple(src)
    if p.kind == "near_parrot":
        if len(src) == 1:
            return tuple(src)
        drop = _rng(src, p).randrange(len(src))
        return src[:drop] + src[drop + 1 :]
    if p.kind == "reverse":
        return src[::-1]
    if p.kind == "shuffle":
        if len(src) < 2:
            return tuple(src)
        rng = _rng(src, p)
        order = list(range(len(src)))
        identity = list(order)
        rng.shuffle(order)
        while order == identity:
            # Reject the identity index permutation; repeated tokens may
            # still reproduce the original surface form.
            rng.shuffle(order)
        return tuple(src[i] for i in order)
    # truncate
    keep = math.ceil(p.ratio * len(src))
    return src[:keep]


def build_challenge_set(corpus: Corpus, p: Perturbation) -> Corpus:
    """Replace every record's candidates with the perturbed source.

    References and the corpus name are untouched, so evaluation against
    the unperturbed corpus's benchmark needs no overrides.
    """
    records = tuple(
        replace(r, candidates=(perturb(r.source, p),), selected=0)
        for r in corpus.records
    )
    return Corpus(records=records, name=corpus.name)


def metric_contrast_report(
    corpus: Corpus,
    perturbations: Sequence[Perturbation],
    cfg: EvalConfig = DEFAULT_EVAL,
    bench: Benchmark | None = None,
    workers: int = 1,
):
    """One evaluation row per perturbation, all pinned to the benchmark of
    the unperturbed corpus."""
    if bench is None:
        bench = compute_benchmark(corpus)
    rows = []
    for p in perturbations:
        challenge = build_challenge_set(corpus, p)
        report = evaluate_pairs(challenge, bench, cfg, mode="generations", workers=workers)
        rows.append((p, report))
    return rows
