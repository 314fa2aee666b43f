"""HTTP scoring service wrapping the core library.

Long-running, multi-client counterpart of the CLI: generation pipelines
can benchmark a corpus once, then score and select candidates over HTTP.
Domain errors (degenerate benchmarks, schema violations) map to 400;
request-shape violations are pydantic 422s.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..challenge import Perturbation, build_challenge_set
from ..corpus import Corpus, ParaphraseRecord, evaluate_pairs, record_to_dict
from ..metrics import meteor_lite, pinc, rouge_l, rouge_n, ter
from ..rouge_p import Benchmark, RougePConfig, compute_benchmark, rouge_p_sentence
from ..selection import SelectionConfig, select_best
from ..text import TokenizerConfig, tokenize
from .schemas import (
    BenchmarkModel,
    BenchmarkRequest,
    EvaluateRequest,
    EvaluateResponse,
    HealthResponse,
    PairScoresRequest,
    PairScoresResponse,
    PerturbRequest,
    PerturbResponse,
    RecordOut,
    RougePRequest,
    RougePResponse,
    SelectRequest,
    SelectResponse,
    TokenizeRequest,
    TokenizeResponse,
    TokenizerOptions,
)

app = FastAPI(title="paraeval", version=__version__)


def _tok_config(options: TokenizerOptions) -> TokenizerConfig:
    return TokenizerConfig(
        lowercase=options.lowercase,
        punctuation_mode=options.punctuation_mode,
        unicode_normalize=options.unicode_normalize,
    )


def _to_corpus(records, tokenizer: TokenizerOptions, corpus_id: str) -> Corpus:
    cfg = _tok_config(tokenizer)
    out = []
    try:
        for i, rec in enumerate(records):
            out.append(
                ParaphraseRecord(
                    id=rec.id if rec.id is not None else str(i + 1),
                    source=tokenize(rec.source, cfg),
                    references=tuple(tokenize(r, cfg) for r in rec.references),
                    candidates=tuple(tokenize(c, cfg) for c in rec.candidates),
                    selected=rec.selected,
                )
            )
        return Corpus(records=tuple(out), name=corpus_id)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _to_benchmark(model: BenchmarkModel) -> Benchmark:
    try:
        return Benchmark(
            bench_rouge_l=model.bench_rouge_l,
            mode=model.mode,
            corpus_id=model.corpus_id,
            pair_count=model.pair_count,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/tokenize", response_model=TokenizeResponse)
def tokenize_text(req: TokenizeRequest) -> TokenizeResponse:
    return TokenizeResponse(tokens=list(tokenize(req.text, _tok_config(req.tokenizer))))


@app.post("/scores/pair", response_model=PairScoresResponse)
def pair_scores(req: PairScoresRequest) -> PairScoresResponse:
    cfg = _tok_config(req.tokenizer)
    src = tokenize(req.source, cfg)
    cand = tokenize(req.candidate, cfg)
    if not src or not cand:
        raise HTTPException(status_code=400, detail="source and candidate must be non-empty")
    refs = [tokenize(r, cfg) for r in req.references]
    response = PairScoresResponse(
        src_rouge_1=rouge_n(cand, [src], 1),
        src_rouge_l=rouge_l(cand, [src]),
        pinc=pinc(src, cand),
    )
    if refs:
        response.meteor_vs_refs = meteor_lite(cand, refs)
        response.rouge_l_vs_refs = rouge_l(cand, refs)
        try:
            response.ter_vs_refs = ter(cand, refs)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
    return response


@app.post("/benchmark", response_model=BenchmarkModel)
def benchmark(req: BenchmarkRequest) -> BenchmarkModel:
    corpus = _to_corpus(req.records, req.tokenizer, req.corpus_id)
    try:
        bench = compute_benchmark(corpus, mode=req.mode)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return BenchmarkModel(
        bench_rouge_l=bench.bench_rouge_l,
        mode=bench.mode,
        corpus_id=bench.corpus_id,
        pair_count=bench.pair_count,
    )


@app.post("/rouge-p", response_model=RougePResponse)
def rouge_p(req: RougePRequest) -> RougePResponse:
    cfg = _tok_config(req.tokenizer)
    bench = _to_benchmark(req.benchmark)
    try:
        breakdown = rouge_p_sentence(
            tokenize(req.generation, cfg),
            tokenize(req.source, cfg),
            bench,
            RougePConfig(beta=req.beta, gamma=req.gamma),
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return RougePResponse(
        src_rouge_1=breakdown.src_rouge_1,
        src_rouge_l=breakdown.src_rouge_l,
        nf=breakdown.nf,
        ff=breakdown.ff,
        lenpen=breakdown.lenpen,
        score=breakdown.score,
    )


@app.post("/select", response_model=SelectResponse)
def select(req: SelectRequest) -> SelectResponse:
    cfg = _tok_config(req.tokenizer)
    try:
        result = select_best(
            [tokenize(c, cfg) for c in req.candidates],
            tokenize(req.source, cfg),
            SelectionConfig(
                w=req.w,
                rl_lower=req.rl_lower,
                rl_upper=req.rl_upper,
                apply_length_penalty=req.apply_length_penalty,
            ),
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return SelectResponse(
        chosen_index=result.chosen_index,
        chosen=req.candidates[result.chosen_index],
        scores=list(result.scores),
        filtered=list(result.filtered),
        used_fallback=result.used_fallback,
    )


@app.post("/evaluate", response_model=EvaluateResponse)
def evaluate(req: EvaluateRequest) -> EvaluateResponse:
    corpus = _to_corpus(req.records, req.tokenizer, req.corpus_id)
    bench = _to_benchmark(req.benchmark)
    try:
        report = evaluate_pairs(corpus, bench, mode=req.mode)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return EvaluateResponse(
        corpus=report.corpus,
        pair_count=report.pair_count,
        bleu=report.bleu,
        ter=report.ter,
        src_rouge_1=report.src_rouge_1,
        src_rouge_l=report.src_rouge_l,
        std_src_rouge_l=report.std_src_rouge_l,
        pinc=report.pinc,
        rouge_p=report.rouge_p,
        benchmark=req.benchmark,
    )


@app.post("/perturb", response_model=PerturbResponse)
def perturb_corpus(req: PerturbRequest) -> PerturbResponse:
    corpus = _to_corpus(req.records, req.tokenizer, "")
    try:
        challenge = build_challenge_set(
            corpus, Perturbation(kind=req.kind, ratio=req.ratio, seed=req.seed)
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return PerturbResponse(
        records=[RecordOut(**record_to_dict(r)) for r in challenge.records]
    )
