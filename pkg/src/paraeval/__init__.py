"""paraeval: paraphrase quality evaluation engine.

Library surface: tokenization kernels, the baseline metric suite
(ROUGE-N/L, corpus BLEU, PINC, TER, METEOR-lite), the benchmarked
paraphrase score with its factor breakdown, candidate selection,
corpus evaluation, and deterministic challenge-set generation.
"""

from .challenge import Perturbation, build_challenge_set, metric_contrast_report, perturb
from .config import RunConfig, load_run_config, run_config_from_dict
from .corpus import (
    Corpus,
    CorpusFormatError,
    DiversityReport,
    EvalConfig,
    EvaluationReport,
    ParaphraseRecord,
    diversity_report,
    dump_corpus,
    evaluate_pairs,
    load_corpus,
    sample_fraction,
    save_corpus,
    self_bleu,
    std_src_rouge_l,
    vocabulary_diversity,
)
from .metrics import (
    MeteorConfig,
    PincConfig,
    RougeLConfig,
    TerConfig,
    bleu_corpus,
    meteor_lite,
    pinc,
    rouge_l,
    rouge_n,
    ter,
)
from .rouge_p import (
    Benchmark,
    DegenerateCorpusError,
    RougePBreakdown,
    RougePConfig,
    compute_benchmark,
    fluency_factor,
    length_penalty,
    novelty_factor,
    rouge_p_corpus,
    rouge_p_sentence,
)
from .selection import SelectionConfig, SelectionResult, select_best, selection_score
from .text import Sentence, TokenizerConfig, lcs_length, ngrams, tokenize

__version__ = "0.1.0"

__all__ = [
    "Benchmark",
    "Corpus",
    "CorpusFormatError",
    "DegenerateCorpusError",
    "DiversityReport",
    "EvalConfig",
    "EvaluationReport",
    "MeteorConfig",
    "ParaphraseRecord",
    "Perturbation",
    "PincConfig",
    "RougeLConfig",
    "RougePBreakdown",
    "RougePConfig",
    "RunConfig",
    "SelectionConfig",
    "SelectionResult",
    "Sentence",
    "TerConfig",
    "TokenizerConfig",
    "bleu_corpus",
    "build_challenge_set",
    "compute_benchmark",
    "diversity_report",
    "dump_corpus",
    "evaluate_pairs",
    "fluency_factor",
    "lcs_length",
    "length_penalty",
    "load_corpus",
    "load_run_config",
    "meteor_lite",
    "metric_contrast_report",
    "ngrams",
    "novelty_factor",
    "perturb",
    "pinc",
    "rouge_l",
    "rouge_n",
    "rouge_p_corpus",
    "rouge_p_sentence",
    "run_config_from_dict",
    "sample_fraction",
    "save_corpus",
    "select_best",
    "selection_score",
    "self_bleu",
    "std_src_rouge_l",
    "ter",
    "tokenize",
    "vocabulary_diversity",
]
