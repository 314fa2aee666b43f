"""Baseline reference metrics: ROUGE-N, ROUGE-L, corpus BLEU, PINC, TER
and a lightweight METEOR (exact + stem alignment stages)."""

from .bleu import bleu_corpus, bleu_pair_statistics, bleu_from_statistics
from .meteor import MeteorConfig, meteor_lite
from .pinc import PincConfig, pinc
from .rouge import RougeLConfig, rouge_l, rouge_n
from .ter import TerConfig, ter, ter_from_statistics, ter_pair_statistics

__all__ = [
    "MeteorConfig",
    "PincConfig",
    "RougeLConfig",
    "TerConfig",
    "bleu_corpus",
    "bleu_pair_statistics",
    "bleu_from_statistics",
    "meteor_lite",
    "pinc",
    "rouge_l",
    "rouge_n",
    "ter",
    "ter_from_statistics",
    "ter_pair_statistics",
]
