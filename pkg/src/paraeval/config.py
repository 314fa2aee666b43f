"""Run configuration: one document covering every tunable, loadable from a
JSON file whose keys mirror the field names. Command-line flags override
file values field by field."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path

from .corpus import EvalConfig
from .metrics.meteor import MeteorConfig
from .metrics.pinc import PincConfig
from .metrics.ter import TerConfig
from .rouge_p import RougePConfig
from .selection import SelectionConfig
from .text import TokenizerConfig

OUTPUT_FORMATS = ("json", "table", "tsv")


@dataclass(frozen=True)
class RunConfig:
    tokenizer: TokenizerConfig = field(default_factory=TokenizerConfig)
    rouge_p: RougePConfig = field(default_factory=RougePConfig)
    selection: SelectionConfig = field(default_factory=SelectionConfig)
    pinc: PincConfig = field(default_factory=PincConfig)
    meteor: MeteorConfig = field(default_factory=MeteorConfig)
    ter: TerConfig = field(default_factory=TerConfig)
    workers: int = 1
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output_format: {self.output_format!r}")

    def eval_config(self) -> EvalConfig:
        return EvalConfig(rouge_p=self.rouge_p, pinc=self.pinc, ter=self.ter)


_SUB_CONFIGS = {
    "tokenizer": TokenizerConfig,
    "rouge_p": RougePConfig,
    "selection": SelectionConfig,
    "pinc": PincConfig,
    "meteor": MeteorConfig,
    "ter": TerConfig,
}


def _build_sub(cls, data: dict, name: str):
    allowed = {f.name for f in fields(cls)}
    unknown = set(data) - allowed
    if unknown:
        raise ValueError(f"unknown key(s) in {name!r} config: {sorted(unknown)}")
    if cls is MeteorConfig and "stages" in data:
        data = dict(data, stages=tuple(data["stages"]))
    return cls(**data)


def run_config_from_dict(data: dict) -> RunConfig:
    kwargs = {}
    allowed = {f.name for f in fields(RunConfig)}
    unknown = set(data) - allowed
    if unknown:
        raise ValueError(f"unknown config key(s): {sorted(unknown)}")
    for name, cls in _SUB_CONFIGS.items():
        if name in data:
            sub = data[name]
            if not isinstance(sub, dict):
                raise ValueError(f"config section {name!r} must be an object")
            kwargs[name] = _build_sub(cls, sub, name)
    for name in ("workers", "seed", "output_format"):
        if name in data:
            kwargs[name] = data[name]
    return RunConfig(**kwargs)


def load_run_config(path: str | Path) -> RunConfig:
    text = Path(path).read_text(encoding="utf-8")
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a single JSON object")
    return run_config_from_dict(data)
