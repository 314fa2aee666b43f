"""Corpus data model, ingestion, sampling, and corpus-level evaluation.

Formats:
  JSONL  one object per line:
         {"id": str, "source": str, "references": [str, ...],
          "candidates": [str, ...] (optional), "selected": int (optional)}
  TSV    two columns source<TAB>reference, no header; ids are assigned
         "1", "2", ... in file order.

Evaluation treats either each reference (pair mode) or each record's
selected candidate (generation mode) as the generation against the
record's source. Sentence-level metrics are averaged over all evaluated
(generation, source) pairs; BLEU and TER pool corpus-level statistics
against the record references. Reductions run in id-sorted order with
exact or fsum arithmetic, so reports are bit-identical for any worker
count.
"""

from __future__ import annotations

import json
import math
import random
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path

from .metrics.bleu import bleu_from_statistics, bleu_pair_statistics
from .metrics.pinc import PincConfig, pinc
from .metrics.rouge import RougeLConfig, rouge_l, rouge_n
from .metrics.ter import TerConfig, ter_from_statistics, ter_pair_statistics
from .rouge_p import (
    DEFAULT_ROUGE_P,
    Benchmark,
    RougePConfig,
    breakdown_from_components,
)
from .text import DEFAULT_TOKENIZER, Sentence, TokenizerConfig, tokenize


class CorpusFormatError(ValueError):
    """Input file violated the corpus schema; message names the line."""


@dataclass(frozen=True)
class ParaphraseRecord:
    id: str
    source: Sentence
    references: tuple[Sentence, ...]
    candidates: tuple[Sentence, ...] = ()
    selected: int | None = None

    def __post_init__(self) -> None:
        if not self.references:
            raise ValueError(f"record {self.id!r} needs at least one reference")
        if self.selected is not None and not 0 <= self.selected < len(self.candidates):
            raise ValueError(f"record {self.id!r}: selected index out of range")


@dataclass(frozen=True)
class Corpus:
    records: tuple[ParaphraseRecord, ...]
    name: str = ""

    def __post_init__(self) -> None:
        ids = [r.id for r in self.records]
        if len(set(ids)) != len(ids):
            raise ValueError("record ids must be unique")

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class EvalConfig:
    """Metric settings used for corpus evaluation."""

    rouge_p: RougePConfig = field(default_factory=RougePConfig)
    rouge_l: RougeLConfig = field(default_factory=RougeLConfig)
    pinc: PincConfig = field(default_factory=PincConfig)
    ter: TerConfig = field(default_factory=TerConfig)


DEFAULT_EVAL = EvalConfig()


@dataclass(frozen=True)
class EvaluationReport:
    """Corpus aggregates, one row of the standard results table.

    std_src_rouge_l is the population standard deviation (divide by n).
    """

    corpus: str
    pair_count: int
    bleu: float
    ter: float
    src_rouge_1: float
    src_rouge_l: float
    std_src_rouge_l: float
    pinc: float
    rouge_p: float
    benchmark: Benchmark

    _COLUMNS = ("BLEU", "TER", "srcROUGE1", "srcROUGEL", "std", "PINC", "ROUGEP")

    def _row(self) -> tuple[str, ...]:
        return (
            f"{self.bleu:.2f}",
            f"{self.ter:.2f}",
            f"{self.src_rouge_1:.4f}",
            f"{self.src_rouge_l:.4f}",
            f"{self.std_src_rouge_l:.4f}",
            f"{self.pinc:.4f}",
            f"{self.rouge_p:.4f}",
        )

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "pair_count": self.pair_count,
            "bleu": self.bleu,
            "ter": self.ter,
            "src_rouge_1": self.src_rouge_1,
            "src_rouge_l": self.src_rouge_l,
            "std_src_rouge_l": self.std_src_rouge_l,
            "pinc": self.pinc,
            "rouge_p": self.rouge_p,
            "benchmark": {
                "bench_rouge_l": self.benchmark.bench_rouge_l,
                "mode": self.benchmark.mode,
                "corpus_id": self.benchmark.corpus_id,
                "pair_count": self.benchmark.pair_count,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_tsv(self) -> str:
        header = "\t".join(self._COLUMNS)
        return header + "\n" + "\t".join(self._row())

    def to_table(self) -> str:
        row = self._row()
        widths = [max(len(h), len(v)) for h, v in zip(self._COLUMNS, row)]
        head = "  ".join(h.rjust(w) for h, w in zip(self._COLUMNS, widths))
        body = "  ".join(v.rjust(w) for v, w in zip(row, widths))
        title = f"corpus: {self.corpus}  pairs: {self.pair_count}"
        return "\n".join((title, head, body))


@dataclass(frozen=True)
class DiversityReport:
    vocabulary_diversity: float
    self_bleu: float
    sample_size: int


def _require_text(obj, key: str, lineno: int, path) -> str:
    value = obj.get(key)
    if not isinstance(value, str):
        raise CorpusFormatError(f"{path}:{lineno}: field {key!r} must be a string")
    return value


def _parse_jsonl_line(line: str, lineno: int, path, cfg: TokenizerConfig) -> ParaphraseRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(obj, dict):
        raise CorpusFormatError(f"{path}:{lineno}: row must be a JSON object")
    if "id" not in obj:
        raise CorpusFormatError(f"{path}:{lineno}: missing field 'id'")
    refs = obj.get("references")
    if not isinstance(refs, list) or not refs:
        raise CorpusFormatError(
            f"{path}:{lineno}: 'references' must be a non-empty array"
        )
    if not all(isinstance(r, str) for r in refs):
        raise CorpusFormatError(f"{path}:{lineno}: references must be strings")
    cands = obj.get("candidates", [])
    if not isinstance(cands, list) or not all(isinstance(c, str) for c in cands):
        raise CorpusFormatError(f"{path}:{lineno}: candidates must be strings")
    selected = obj.get("selected")
    if selected is not None and (isinstance(selected, bool) or not isinstance(selected, int)):
        raise CorpusFormatError(f"{path}:{lineno}: 'selected' must be an integer")
    source = _require_text(obj, "source", lineno, path)
    try:
        return ParaphraseRecord(
            id=str(obj["id"]),
            source=tokenize(source, cfg),
            references=tuple(tokenize(r, cfg) for r in refs),
            candidates=tuple(tokenize(c, cfg) for c in cands),
            selected=selected,
        )
    except ValueError as exc:
        raise CorpusFormatError(f"{path}:{lineno}: {exc}") from exc


def load_corpus(
    path: str | Path,
    fmt: str = "auto",
    tokenizer: TokenizerConfig = DEFAULT_TOKENIZER,
    name: str | None = None,
) -> Corpus:
    """Read a JSONL or TSV corpus; the corpus name defaults to the file stem."""
    path = Path(path)
    if fmt == "auto":
        fmt = "tsv" if path.suffix.lower() in (".tsv", ".txt") else "jsonl"
    if fmt not in ("jsonl", "tsv"):
        raise ValueError(f"unknown corpus format: {fmt!r}")
    records = []
    with path.open(encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            if fmt == "jsonl":
                records.append(_parse_jsonl_line(line, lineno, path, tokenizer))
            else:
                cols = line.split("\t")
                if len(cols) != 2:
                    raise CorpusFormatError(
                        f"{path}:{lineno}: expected source<TAB>reference, "
                        f"got {len(cols)} column(s)"
                    )
                records.append(
                    ParaphraseRecord(
                        id=str(len(records) + 1),
                        source=tokenize(cols[0], tokenizer),
                        references=(tokenize(cols[1], tokenizer),),
                    )
                )
    try:
        return Corpus(records=tuple(records), name=name if name is not None else path.stem)
    except ValueError as exc:
        raise CorpusFormatError(f"{path}: {exc}") from exc


def record_to_dict(record: ParaphraseRecord) -> dict:
    obj: dict = {
        "id": record.id,
        "source": " ".join(record.source),
        "references": [" ".join(r) for r in record.references],
    }
    if record.candidates:
        obj["candidates"] = [" ".join(c) for c in record.candidates]
    if record.selected is not None:
        obj["selected"] = record.selected
    return obj


def dump_corpus(corpus: Corpus) -> str:
    """Serialize to JSONL text (deterministic key order, UTF-8 friendly)."""
    lines = [
        json.dumps(record_to_dict(r), ensure_ascii=False, separators=(",", ":"))
        for r in corpus.records
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    Path(path).write_text(dump_corpus(corpus), encoding="utf-8")


def sample_fraction(corpus: Corpus, fraction: float, seed: int) -> Corpus:
    """Seeded random subset of ceil(fraction * n) records, original order kept.

    Uses Python's Mersenne Twister (random.Random(seed).sample over record
    positions) so the subset is reproducible for a given seed.
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError("fraction must lie in (0, 1]")
    n = len(corpus.records)
    k = math.ceil(fraction * n)
    positions = sorted(random.Random(seed).sample(range(n), k))
    return Corpus(
        records=tuple(corpus.records[i] for i in positions),
        name=corpus.name,
    )


def std_src_rouge_l(values: Sequence[float]) -> float:
    """Population standard deviation (divide by n) of per-sentence scores."""
    values = list(values)
    if not values:
        raise ValueError("need at least one value")
    mean = math.fsum(values) / len(values)
    var = math.fsum((v - mean) ** 2 for v in values) / len(values)
    return math.sqrt(var)


# One row per record: (record id, per-pair sentence metrics, pooled
# BLEU/TER statistics). Returned by workers and reduced in id order.
_RecordStats = tuple[
    str,
    list[float],
    list[float],
    list[float],
    list[float],
    tuple,
    tuple[int, float],
]


def _record_stats(
    record: ParaphraseRecord,
    bench: Benchmark,
    cfg: EvalConfig,
    mode: str,
) -> _RecordStats:
    src = record.source
    if not src:
        raise ValueError(f"record {record.id!r} has an empty source")
    if mode == "pairs":
        gens: Sequence[Sentence] = record.references
        corpus_cand = src
    else:
        if record.selected is None:
            raise ValueError(f"record {record.id!r} has no selected candidate")
        gen = record.candidates[record.selected]
        gens = (gen,)
        corpus_cand = gen
    r1s: list[float] = []
    rls: list[float] = []
    pincs: list[float] = []
    rouge_ps: list[float] = []
    for gen in gens:
        if not gen:
            raise ValueError(f"record {record.id!r} has an empty generation side")
        r1 = rouge_n(gen, [src], 1)
        rl = rouge_l(gen, [src], cfg.rouge_l)
        breakdown = breakdown_from_components(
            r1, rl, len(gen), len(src), bench, cfg.rouge_p
        )
        r1s.append(r1)
        rls.append(rl)
        rouge_ps.append(breakdown.score)
        pincs.append(pinc(src, gen, cfg.pinc))
    bleu_stats = bleu_pair_statistics(corpus_cand, record.references)
    ter_stats = ter_pair_statistics(corpus_cand, record.references, cfg.ter)
    return (record.id, r1s, rls, pincs, rouge_ps, bleu_stats, ter_stats)


def _resolve_mode(corpus: Corpus, mode: str) -> str:
    if mode == "auto":
        if corpus.records and all(r.selected is not None for r in corpus.records):
            return "generations"
        return "pairs"
    if mode not in ("pairs", "generations"):
        raise ValueError(f"unknown evaluation mode: {mode!r}")
    return mode


def evaluate_pairs(
    corpus: Corpus,
    bench: Benchmark,
    cfg: EvalConfig = DEFAULT_EVAL,
    mode: str = "pairs",
    workers: int = 1,
) -> EvaluationReport:
    """Full metric suite over a corpus.

    mode "pairs" scores each reference against its source (dataset rows);
    mode "generations" scores each record's selected candidate; "auto"
    picks generations when every record has a selection.
    """
    if not corpus.records:
        raise ValueError("cannot evaluate an empty corpus")
    mode = _resolve_mode(corpus, mode)
    if workers > 1:
        chunk = max(1, len(corpus.records) // (workers * 8))
        stats = partial(_record_stats, bench=bench, cfg=cfg, mode=mode)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(stats, corpus.records, chunksize=chunk))
    else:
        rows = [_record_stats(r, bench, cfg, mode) for r in corpus.records]
    rows.sort(key=lambda row: row[0])

    r1_all: list[float] = []
    rl_all: list[float] = []
    pinc_all: list[float] = []
    rouge_p_all: list[float] = []
    for _, r1s, rls, pincs, rouge_ps, _, _ in rows:
        r1_all.extend(r1s)
        rl_all.extend(rls)
        pinc_all.extend(pincs)
        rouge_p_all.extend(rouge_ps)
    pair_count = len(rl_all)
    return EvaluationReport(
        corpus=corpus.name,
        pair_count=pair_count,
        bleu=bleu_from_statistics(row[5] for row in rows),
        ter=ter_from_statistics(row[6] for row in rows),
        src_rouge_1=math.fsum(r1_all) / pair_count,
        src_rouge_l=math.fsum(rl_all) / pair_count,
        std_src_rouge_l=std_src_rouge_l(rl_all),
        pinc=math.fsum(pinc_all) / pair_count,
        rouge_p=math.fsum(rouge_p_all) / pair_count,
        benchmark=bench,
    )


def vocabulary_diversity(
    source: Sentence,
    reference: Sentence,
    paraphrases: Sequence[Sentence],
) -> float:
    """Distinct tokens over total tokens across source, reference and the
    sampled paraphrases (conventionally 10 of them)."""
    sentences = [source, reference, *paraphrases]
    if any(not s for s in sentences):
        raise ValueError("all sentences must be non-empty")
    total = sum(len(s) for s in sentences)
    distinct = len({token for s in sentences for token in s})
    return distinct / total


def self_bleu(candidates: Sequence[Sentence]) -> float:
    """Mean corpus BLEU of each candidate against all the others."""
    candidates = list(candidates)
    if len(candidates) < 2:
        raise ValueError("self_bleu needs at least two candidates")
    scores = []
    for i, cand in enumerate(candidates):
        others = candidates[:i] + candidates[i + 1 :]
        scores.append(bleu_from_statistics([bleu_pair_statistics(cand, others)]))
    return math.fsum(scores) / len(scores)


def diversity_report(
    source: Sentence,
    reference: Sentence,
    paraphrases: Sequence[Sentence],
) -> DiversityReport:
    return DiversityReport(
        vocabulary_diversity=vocabulary_diversity(source, reference, paraphrases),
        self_bleu=self_bleu(paraphrases),
        sample_size=len(paraphrases),
    )
