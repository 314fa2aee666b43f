"""Command-line front end: benchmark, evaluate, select, perturb, sample,
serve.

The CLI adds no computation of its own: every command parses arguments,
calls the library, and serializes the result. stdout carries data,
stderr carries warnings and summaries.

Exit codes: 0 success, 2 input or schema error, 3 degenerate corpus,
4 benchmark/corpus mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .challenge import KINDS, Perturbation, build_challenge_set
from .config import OUTPUT_FORMATS, RunConfig, load_run_config
from .corpus import (
    Corpus,
    CorpusFormatError,
    dump_corpus,
    evaluate_pairs,
    load_corpus,
    sample_fraction,
)
from .rouge_p import Benchmark, DegenerateCorpusError, compute_benchmark
from .selection import select_best

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_BENCHMARK_MISMATCH = 4


def _common_flags(parser: argparse.ArgumentParser, top_level: bool = False) -> None:
    # Sub-level copies use SUPPRESS so they never clobber a value parsed
    # before the subcommand.
    default = None if top_level else argparse.SUPPRESS
    parser.add_argument("--config", default=default, help="JSON run-config file")
    parser.add_argument("--seed", type=int, default=default, help="seed for all randomness")
    parser.add_argument("--workers", type=int, default=default, help="worker process count")
    parser.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default=default,
        dest="output_format",
        help="report output format",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paraeval",
        description="Paraphrase quality evaluation engine",
    )
    _common_flags(parser, top_level=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _common_flags(p)
        return p

    p = command("benchmark", "compute the corpus ROUGE_L benchmark")
    p.add_argument("corpus", help="corpus file (JSONL or TSV)")
    p.add_argument("--mode", choices=("micro", "macro"), default="micro")
    p.add_argument("--input-format", choices=("auto", "jsonl", "tsv"), default="auto")
    p.add_argument("--name", default=None, help="override the corpus name")
    p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")

    p = command("evaluate", "full metric suite over a corpus")
    p.add_argument("corpus", help="corpus file (JSONL or TSV)")
    p.add_argument("--benchmark", required=True, help="benchmark JSON file")
    p.add_argument("--mode", choices=("auto", "pairs", "generations"), default="auto")
    p.add_argument("--input-format", choices=("auto", "jsonl", "tsv"), default="auto")
    p.add_argument("--name", default=None, help="override the corpus name")
    p.add_argument(
        "--force",
        action="store_true",
        help="evaluate even if the benchmark was computed on another corpus",
    )
    p.add_argument("-o", "--output", default=None)

    p = command("select", "pick one candidate per record")
    p.add_argument("corpus", help="JSONL corpus with candidates")
    p.add_argument("--w", type=float, default=None, help="adequacy-vs-novelty weight")
    p.add_argument("--rl-lower", type=float, default=None)
    p.add_argument("--rl-upper", type=float, default=None)
    p.add_argument(
        "--no-length-penalty",
        action="store_true",
        help="disable the brevity-style penalty on short candidates",
    )
    p.add_argument("-o", "--output", default=None)

    p = command("perturb", "build a deterministic challenge set")
    p.add_argument("corpus", help="corpus file (JSONL or TSV)")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--ratio", type=float, default=0.5, help="truncate keep ratio")
    p.add_argument("--input-format", choices=("auto", "jsonl", "tsv"), default="auto")
    p.add_argument("-o", "--output", default=None)

    p = command("sample", "seeded random subset of a corpus")
    p.add_argument("corpus", help="corpus file (JSONL or TSV)")
    p.add_argument("--fraction", type=float, required=True)
    p.add_argument("--input-format", choices=("auto", "jsonl", "tsv"), default="auto")
    p.add_argument("-o", "--output", default=None)

    p = command("serve", "run the HTTP scoring service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = load_run_config(args.config) if args.config else RunConfig()
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.output_format is not None:
        overrides["output_format"] = args.output_format
    return replace(cfg, **overrides) if overrides else cfg


def _emit(text: str, output: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(args: argparse.Namespace, cfg: RunConfig) -> Corpus:
    fmt = getattr(args, "input_format", "auto")
    name = getattr(args, "name", None)
    return load_corpus(args.corpus, fmt=fmt, tokenizer=cfg.tokenizer, name=name)


def _cmd_benchmark(args: argparse.Namespace, cfg: RunConfig) -> int:
    corpus = _load(args, cfg)
    bench = compute_benchmark(corpus, mode=args.mode)
    _emit(bench.to_json(), args.output)
    return EXIT_OK


def _cmd_evaluate(args: argparse.Namespace, cfg: RunConfig) -> int:
    corpus = _load(args, cfg)
    bench = Benchmark.from_file(args.benchmark)
    if bench.corpus_id != corpus.name and not args.force:
        print(
            f"error: benchmark was computed on {bench.corpus_id!r} but the "
            f"corpus is {corpus.name!r} (use --force or --name to override)",
            file=sys.stderr,
        )
        return EXIT_BENCHMARK_MISMATCH
    report = evaluate_pairs(
        corpus, bench, cfg.eval_config(), mode=args.mode, workers=cfg.workers
    )
    if cfg.output_format == "json":
        _emit(report.to_json(), args.output)
    elif cfg.output_format == "tsv":
        _emit(report.to_tsv(), args.output)
    else:
        _emit(report.to_table(), args.output)
    return EXIT_OK


def _cmd_select(args: argparse.Namespace, cfg: RunConfig) -> int:
    corpus = _load(args, cfg)
    sel = cfg.selection
    if args.w is not None:
        sel = replace(sel, w=args.w)
    if args.rl_lower is not None:
        sel = replace(sel, rl_lower=args.rl_lower)
    if args.rl_upper is not None:
        sel = replace(sel, rl_upper=args.rl_upper)
    if args.no_length_penalty:
        sel = replace(sel, apply_length_penalty=False)
    missing = [r.id for r in corpus.records if not r.candidates]
    if missing:
        raise CorpusFormatError(
            f"{args.corpus}: record(s) without candidates: {missing[:5]}"
        )
    chosen_scores = []
    filtered_total = 0
    fallbacks = 0
    records = []
    for record in corpus.records:
        result = select_best(record.candidates, record.source, sel)
        records.append(replace(record, selected=result.chosen_index))
        chosen_scores.append(result.scores[result.chosen_index])
        filtered_total += sum(result.filtered)
        fallbacks += result.used_fallback
    _emit(dump_corpus(Corpus(records=tuple(records), name=corpus.name)), args.output)
    mean_score = sum(chosen_scores) / len(chosen_scores) if chosen_scores else 0.0
    print(
        f"selected {len(records)} record(s); mean chosen score {mean_score:.4f}; "
        f"{filtered_total} candidate(s) outside the srcROUGE_L window",
        file=sys.stderr,
    )
    if fallbacks:
        print(
            f"warning: {fallbacks} record(s) had every candidate filtered; "
            "window ignored for those records",
            file=sys.stderr,
        )
    return EXIT_OK


def _cmd_perturb(args: argparse.Namespace, cfg: RunConfig) -> int:
    corpus = _load(args, cfg)
    p = Perturbation(kind=args.kind, ratio=args.ratio, seed=cfg.seed)
    _emit(dump_corpus(build_challenge_set(corpus, p)), args.output)
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace, cfg: RunConfig) -> int:
    corpus = _load(args, cfg)
    _emit(dump_corpus(sample_fraction(corpus, args.fraction, cfg.seed)), args.output)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace, cfg: RunConfig) -> int:
    import uvicorn

    uvicorn.run("paraeval.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "benchmark": _cmd_benchmark,
    "evaluate": _cmd_evaluate,
    "select": _cmd_select,
    "perturb": _cmd_perturb,
    "sample": _cmd_sample,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _resolve_config(args)
        return _COMMANDS[args.command](args, cfg)
    except CorpusFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegenerateCorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
