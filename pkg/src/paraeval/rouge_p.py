"""Benchmarked paraphrase quality score (ROUGE_P).

The score multiplies four factors computed against the input sentence:

  adequacy         srcROUGE_1, clipped unigram recall of the source in
                   the generation;
  novelty factor   penalizes srcROUGE_L above the corpus benchmark at a
                   polynomial rate, reaching 0 for exact parrots;
  fluency factor   penalizes srcROUGE_L collapsing far below the
                   benchmark (jumbled output with high unigram overlap);
  length penalty   caps credit for generations longer than the source.

The benchmark is the corpus-level ROUGE_L between sources and their
reference paraphrases: the dataset's natural similarity level. Benchmarks
of exactly 0 or 1 are rejected because both factors divide by them.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path

from .metrics.rouge import RougeLConfig, rouge_l, rouge_n
from .text import Sentence, lcs_length

_SRC_ROUGE_L = RougeLConfig(f_beta=1.0)


class DegenerateCorpusError(ValueError):
    """Corpus benchmark fell on 0 or 1: pure parrots or disjoint pairs."""


@dataclass(frozen=True)
class RougePConfig:
    """Factor exponents. beta = 2 limits the novelty penalty to 0.99 over
    the first 10% of headroom above the benchmark; gamma = 7 keeps the
    fluency penalty above 0.99 until srcROUGE_L falls below half the
    benchmark."""

    beta: float = 2.0
    gamma: float = 7.0

    def __post_init__(self) -> None:
        if self.beta <= 0 or self.gamma <= 0:
            raise ValueError("beta and gamma must be positive")


DEFAULT_ROUGE_P = RougePConfig()


@dataclass(frozen=True)
class Benchmark:
    bench_rouge_l: float
    mode: str = "micro"
    corpus_id: str = ""
    pair_count: int = 0

    def __post_init__(self) -> None:
        if not 0.0 < self.bench_rouge_l < 1.0:
            raise DegenerateCorpusError(
                f"benchmark ROUGE_L must lie strictly inside (0, 1), got "
                f"{self.bench_rouge_l}"
            )
        if self.mode not in ("micro", "macro"):
            raise ValueError(f"unknown benchmark mode: {self.mode!r}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Benchmark":
        data = json.loads(text)
        return cls(
            bench_rouge_l=float(data["bench_rouge_l"]),
            mode=data.get("mode", "micro"),
            corpus_id=data.get("corpus_id", ""),
            pair_count=int(data.get("pair_count", 0)),
        )

    @classmethod
    def from_file(cls, path: str | Path) -> "Benchmark":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class RougePBreakdown:
    """Per-sentence factors; score is their exact product."""

    src_rouge_1: float
    src_rouge_l: float
    nf: float
    ff: float
    lenpen: float
    score: float


def compute_benchmark(corpus, mode: str = "micro") -> Benchmark:
    """Corpus ROUGE_L between each source and its reference paraphrases.

    micro pools LCS lengths and sentence lengths over all (source,
    reference) pairs before forming the F-measure; macro averages the
    per-pair F-measures. Degenerate results (0 or 1) are rejected.
    """
    records = list(corpus.records)
    if not records:
        raise ValueError("cannot benchmark an empty corpus")
    lcs_total = 0
    src_total = 0
    ref_total = 0
    per_pair = []
    for record in records:
        if not record.references:
            raise ValueError(f"record {record.id!r} has no references")
        src = record.source
        for ref in record.references:
            common = lcs_length(src, ref)
            lcs_total += common
            src_total += len(src)
            ref_total += len(ref)
            per_pair.append(_f1(common, len(src), len(ref)))
    if mode == "micro":
        value = _f1(lcs_total, src_total, ref_total)
    elif mode == "macro":
        value = math.fsum(per_pair) / len(per_pair)
    else:
        raise ValueError(f"unknown benchmark mode: {mode!r}")
    return Benchmark(
        bench_rouge_l=value,
        mode=mode,
        corpus_id=corpus.name,
        pair_count=len(per_pair),
    )


def _f1(common: int, len_a: int, len_b: int) -> float:
    if common == 0:
        return 0.0
    r = common / len_a
    p = common / len_b
    return 2.0 * r * p / (r + p)


def novelty_factor(
    src_rl: float, bench: Benchmark, cfg: RougePConfig = DEFAULT_ROUGE_P
) -> float:
    """1 - (excess over the benchmark / headroom)^beta, clamped at 1."""
    excess = src_rl - bench.bench_rouge_l
    if excess <= 0.0:
        return 1.0
    return 1.0 - (excess / (1.0 - bench.bench_rouge_l)) ** cfg.beta


def fluency_factor(
    src_rl: float, bench: Benchmark, cfg: RougePConfig = DEFAULT_ROUGE_P
) -> float:
    """1 - (shortfall below the benchmark / benchmark)^gamma, clamped at 1."""
    shortfall = bench.bench_rouge_l - src_rl
    if shortfall <= 0.0:
        return 1.0
    return 1.0 - (shortfall / bench.bench_rouge_l) ** cfg.gamma


def length_penalty(gen_len: int, src_len: int) -> float:
    """min(1, exp(1 - gen_len/src_len)) over token counts."""
    if src_len < 1:
        raise ValueError("source length must be >= 1")
    return min(1.0, math.exp(1.0 - gen_len / src_len))


def breakdown_from_components(
    src_r1: float,
    src_rl: float,
    gen_len: int,
    src_len: int,
    bench: Benchmark,
    cfg: RougePConfig = DEFAULT_ROUGE_P,
) -> RougePBreakdown:
    """Assemble the factor product from precomputed srcROUGE values.

    Single source of truth for the product so sentence scoring and corpus
    aggregation agree bit for bit.
    """
    nf = novelty_factor(src_rl, bench, cfg)
    ff = fluency_factor(src_rl, bench, cfg)
    lenpen = length_penalty(gen_len, src_len)
    return RougePBreakdown(
        src_rouge_1=src_r1,
        src_rouge_l=src_rl,
        nf=nf,
        ff=ff,
        lenpen=lenpen,
        score=src_r1 * nf * ff * lenpen,
    )


def rouge_p_sentence(
    gen: Sentence,
    src: Sentence,
    bench: Benchmark,
    cfg: RougePConfig = DEFAULT_ROUGE_P,
) -> RougePBreakdown:
    """Score one generation against its source sentence.

    An exact parrot scores 0 (the novelty factor vanishes); an empty
    generation scores 0 (no unigram recall).
    """
    if not src:
        raise ValueError("source sentence must be non-empty")
    src_r1 = rouge_n(gen, [src], 1)
    src_rl = rouge_l(gen, [src], _SRC_ROUGE_L)
    return breakdown_from_components(src_r1, src_rl, len(gen), len(src), bench, cfg)


def rouge_p_corpus(corpus, bench: Benchmark, cfg: RougePConfig = DEFAULT_ROUGE_P) -> float:
    """Mean per-sentence score of each record's selected candidate."""
    records = list(corpus.records)
    if not records:
        raise ValueError("cannot score an empty corpus")
    scores = []
    for record in records:
        if record.selected is None:
            raise ValueError(f"record {record.id!r} has no selected generation")
        gen = record.candidates[record.selected]
        scores.append(rouge_p_sentence(gen, record.source, bench, cfg).score)
    return math.fsum(scores) / len(scores)
