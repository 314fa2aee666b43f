"""Pydantic request/response models for the scoring service.

Sentences travel as raw strings; the service tokenizes with the
tokenizer options carried in the request (defaults match the library).
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class TokenizerOptions(BaseModel):
    lowercase: bool = True
    punctuation_mode: Literal["strip", "keep-as-token"] = "strip"
    unicode_normalize: bool = True


class TokenizeRequest(BaseModel):
    text: str
    tokenizer: TokenizerOptions = TokenizerOptions()


class TokenizeResponse(BaseModel):
    tokens: list[str]


class RecordIn(BaseModel):
    id: str | None = None
    source: str
    references: list[str] = Field(min_length=1)
    candidates: list[str] = []
    selected: int | None = None


class RecordOut(BaseModel):
    id: str
    source: str
    references: list[str]
    candidates: list[str] = []
    selected: int | None = None


class BenchmarkModel(BaseModel):
    bench_rouge_l: float
    mode: Literal["micro", "macro"] = "micro"
    corpus_id: str = ""
    pair_count: int = 0


class BenchmarkRequest(BaseModel):
    records: list[RecordIn] = Field(min_length=1)
    mode: Literal["micro", "macro"] = "micro"
    corpus_id: str = ""
    tokenizer: TokenizerOptions = TokenizerOptions()


class PairScoresRequest(BaseModel):
    source: str
    candidate: str
    references: list[str] = []
    tokenizer: TokenizerOptions = TokenizerOptions()


class PairScoresResponse(BaseModel):
    src_rouge_1: float
    src_rouge_l: float
    pinc: float
    meteor_vs_refs: float | None = None
    rouge_l_vs_refs: float | None = None
    ter_vs_refs: float | None = None


class RougePRequest(BaseModel):
    source: str
    generation: str
    benchmark: BenchmarkModel
    beta: float = 2.0
    gamma: float = 7.0
    tokenizer: TokenizerOptions = TokenizerOptions()


class RougePResponse(BaseModel):
    src_rouge_1: float
    src_rouge_l: float
    nf: float
    ff: float
    lenpen: float
    score: float


class SelectRequest(BaseModel):
    source: str
    candidates: list[str] = Field(min_length=1)
    w: float = 1.5
    rl_lower: float = 0.0
    rl_upper: float = 1.0
    apply_length_penalty: bool = True
    tokenizer: TokenizerOptions = TokenizerOptions()


class SelectResponse(BaseModel):
    chosen_index: int
    chosen: str
    scores: list[float]
    filtered: list[bool]
    used_fallback: bool


class EvaluateRequest(BaseModel):
    records: list[RecordIn] = Field(min_length=1)
    benchmark: BenchmarkModel
    mode: Literal["auto", "pairs", "generations"] = "auto"
    corpus_id: str = ""
    tokenizer: TokenizerOptions = TokenizerOptions()


class EvaluateResponse(BaseModel):
    corpus: str
    pair_count: int
    bleu: float
    ter: float
    src_rouge_1: float
    src_rouge_l: float
    std_src_rouge_l: float
    pinc: float
    rouge_p: float
    benchmark: BenchmarkModel


class PerturbRequest(BaseModel):
    records: list[RecordIn] = Field(min_length=1)
    kind: Literal["parrot", "near_parrot", "reverse", "shuffle", "truncate"]
    ratio: float = 0.5
    seed: int = 0
    tokenizer: TokenizerOptions = TokenizerOptions()


class PerturbResponse(BaseModel):
    records: list[RecordOut]


class HealthResponse(BaseModel):
    status: str
    version: str
