"""Translation edit rate on a 0-100 scale.

Edits are unit-cost insertions, deletions, substitutions, and (when
enabled) block shifts. Shifts are searched greedily: each round applies
the single shift that most reduces the remaining edit distance, stopping
when no shift strictly reduces it. Exhaustive shift search is
intractable, so the greedy result is an upper bound on the optimal edit
count; the test suite checks the bound against a brute-force oracle on
small inputs.

Shifted blocks must match the reference somewhere (tercom-style pruning)
and are capped at MAX_SHIFT_LENGTH tokens.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..text import Sentence

MAX_SHIFT_LENGTH = 10


@dataclass(frozen=True)
class TerConfig:
    enable_shifts: bool = True
    max_shift_iterations: int = 50

    def __post_init__(self) -> None:
        if self.max_shift_iterations < 0:
            raise ValueError("max_shift_iterations must be >= 0")


DEFAULT_TER = TerConfig()


def edit_distance(a: Sequence[str], b: Sequence[str]) -> int:
    """Levenshtein distance over tokens, unit costs."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    if lb > la:
        a, b = b, a
        la, lb = lb, la
    row = list(range(lb + 1))
    for i in range(1, la + 1):
        diag = row[0]
        row[0] = i
        x = a[i - 1]
        for j in range(1, lb + 1):
            tmp = row[j]
            if x == b[j - 1]:
                row[j] = diag
            else:
                best = row[j]
                left = row[j - 1]
                if left < best:
                    best = left
                if diag < best:
                    best = diag
                row[j] = best + 1
            diag = tmp
    return row[lb]


def _shift_candidates(cur: Sentence, ref: Sentence):
    """Distinct sequences reachable by moving one reference-matching block."""
    seen = {cur}
    n, m = len(cur), len(ref)
    for i in range(n):
        tok = cur[i]
        for j in range(m):
            if tok != ref[j]:
                continue
            max_len = min(n - i, m - j, MAX_SHIFT_LENGTH)
            for length in range(1, max_len + 1):
                if cur[i + length - 1] != ref[j + length - 1]:
                    break
                rest = cur[:i] + cur[i + length :]
                k = j if j < len(rest) else len(rest)
                shifted = rest[:k] + cur[i : i + length] + rest[k:]
                if shifted not in seen:
                    seen.add(shifted)
                    yield shifted


def edits_to_reference(cand: Sentence, ref: Sentence, cfg: TerConfig = DEFAULT_TER) -> int:
    """Greedy-shift edit count to turn ``cand`` into ``ref``."""
    cur = tuple(cand)
    ref = tuple(ref)
    dist = edit_distance(cur, ref)
    shifts = 0
    if cfg.enable_shifts:
        for _ in range(cfg.max_shift_iterations):
            if dist == 0:
                break
            best_dist = dist
            best_seq = None
            for shifted in _shift_candidates(cur, ref):
                d = edit_distance(shifted, ref)
                if d < best_dist:
                    best_dist = d
                    best_seq = shifted
            if best_seq is None:
                break
            cur = best_seq
            dist = best_dist
            shifts += 1
    return shifts + dist


def ter_pair_statistics(
    cand: Sentence, refs: Sequence[Sentence], cfg: TerConfig = DEFAULT_TER
) -> tuple[int, float]:
    """(min edit count over references, average reference length)."""
    refs = list(refs)
    if not refs or all(len(r) == 0 for r in refs):
        raise ValueError("ter needs at least one non-empty reference")
    edits = min(edits_to_reference(cand, ref, cfg) for ref in refs)
    avg_len = sum(len(r) for r in refs) / len(refs)
    return edits, avg_len


def ter(cand: Sentence, refs: Sequence[Sentence], cfg: TerConfig = DEFAULT_TER) -> float:
    """Edit rate: 100 * min edits over references / average reference length."""
    edits, avg_len = ter_pair_statistics(cand, refs, cfg)
    return 100.0 * edits / avg_len


def ter_from_statistics(stats: Iterable[tuple[int, float]]) -> float:
    """Corpus rate from pooled pair statistics (total edits / total length)."""
    total_edits = 0
    total_len = 0.0
    for edits, avg_len in stats:
        total_edits += edits
        total_len += avg_len
    if total_len == 0:
        raise ValueError("ter needs non-empty references")
    return 100.0 * total_edits / total_len
