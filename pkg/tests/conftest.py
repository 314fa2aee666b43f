import random
import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from paraeval import Corpus, ParaphraseRecord


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "paraeval.cli", *[str(a) for a in args]],
        capture_output=True,
        text=True,
        cwd=cwd,
    )

VOCAB = [f"w{i}" for i in range(200)]


def make_sentence(rng: random.Random, lo: int, hi: int, vocab=VOCAB) -> tuple[str, ...]:
    return tuple(rng.choice(vocab) for _ in range(rng.randint(lo, hi)))


def make_distinct_sentence(rng: random.Random, lo: int, hi: int, vocab=VOCAB) -> tuple[str, ...]:
    return tuple(rng.sample(vocab, rng.randint(lo, hi)))


def paraphrase_of(rng: random.Random, src: tuple[str, ...], vocab=VOCAB) -> tuple[str, ...]:
    """Reference-like rewrite: keeps most tokens, swaps some, may shift length."""
    out = [rng.choice(vocab) if rng.random() < 0.35 else t for t in src]
    if len(out) > 3 and rng.random() < 0.3:
        out.pop(rng.randrange(len(out)))
    if rng.random() < 0.3:
        out.append(rng.choice(vocab))
    if tuple(out) == src:
        out[rng.randrange(len(out))] = rng.choice(vocab)
    return tuple(out)


def make_pair_corpus(seed: int, n: int, name: str = "synthetic") -> Corpus:
    rng = random.Random(seed)
    records = []
    for i in range(n):
        src = make_sentence(rng, 6, 12)
        records.append(
            ParaphraseRecord(
                id=str(i + 1),
                source=src,
                references=(paraphrase_of(rng, src),),
            )
        )
    return Corpus(records=tuple(records), name=name)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture
def small_corpus():
    return make_pair_corpus(seed=11, n=40, name="small")
