import math
import random

import pytest

from paraeval import (
    Benchmark,
    Corpus,
    ParaphraseRecord,
    Perturbation,
    build_challenge_set,
    metric_contrast_report,
    perturb,
)
from paraeval.metrics import pinc, rouge_l, rouge_n, ter
from paraeval.rouge_p import compute_benchmark, rouge_p_sentence

from conftest import make_distinct_sentence


def _distinct_corpus(seed: int, n: int, lo=6, hi=10, name="challenge"):
    rng = random.Random(seed)
    records = []
    for i in range(n):
        src = make_distinct_sentence(rng, lo, hi)
        ref = tuple(t if rng.random() < 0.6 else f"r{rng.randrange(40)}" for t in src)
        records.append(ParaphraseRecord(id=str(i + 1), source=src, references=(ref,)))
    return Corpus(records=tuple(records), name=name)


class TestPerturb:
    def test_reverse(self):
        assert perturb(("a", "b", "c"), Perturbation("reverse")) == ("c", "b", "a")

    def test_parrot(self):
        assert perturb(("a", "b"), Perturbation("parrot")) == ("a", "b")

    def test_truncate_keeps_ceil_of_ratio(self):
        src = ("a", "b", "c", "d", "e", "f")
        assert perturb(src, Perturbation("truncate", ratio=0.5)) == ("a", "b", "c")
        assert perturb(("a", "b", "c"), Perturbation("truncate", ratio=0.5)) == ("a", "b")

    def test_near_parrot_drops_one_token(self):
        src = ("a", "b", "c", "d")
        out = perturb(src, Perturbation("near_parrot", seed=3))
        assert len(out) == 3
        # still a subsequence of the source
        it = iter(src)
        assert all(t in it for t in out)

    def test_near_parrot_single_token_degrades_to_parrot(self):
        assert perturb(("a",), Perturbation("near_parrot", seed=3)) == ("a",)

    def test_shuffle_rejects_identity_permutation(self):
        src = ("a", "b", "c", "d", "e")
        for seed in range(30):
            assert perturb(src, Perturbation("shuffle", seed=seed)) != src

    def test_shuffle_preserves_token_multiset(self):
        src = ("a", "b", "b", "c")
        out = perturb(src, Perturbation("shuffle", seed=1))
        assert sorted(out) == sorted(src)

    def test_deterministic_given_sentence_and_perturbation(self):
        src = ("a", "b", "c", "d", "e", "f")
        for kind in ("near_parrot", "shuffle"):
            p = Perturbation(kind, seed=9)
            assert perturb(src, p) == perturb(src, p)

    def test_different_sentences_use_independent_randomness(self):
        p = Perturbation("shuffle", seed=4)
        a = perturb(("a", "b", "c", "d", "e"), p)
        again = perturb(("a", "b", "c", "d", "e"), p)
        assert a == again

    def test_empty_sentence_is_an_error(self):
        with pytest.raises(ValueError):
            perturb((), Perturbation("reverse"))

    def test_validation(self):
        with pytest.raises(ValueError):
            Perturbation("backwards")
        with pytest.raises(ValueError):
            Perturbation("truncate", ratio=0.0)


class TestBuildChallengeSet:
    def test_candidates_replaced_references_untouched(self):
        corpus = _distinct_corpus(1, 10)
        challenge = build_challenge_set(corpus, Perturbation("parrot"))
        assert challenge.name == corpus.name
        for before, after in zip(corpus.records, challenge.records):
            assert after.candidates == (before.source,)
            assert after.selected == 0
            assert after.references == before.references

    def test_reverse_challenge_is_exact_reversal(self):
        corpus = _distinct_corpus(2, 10)
        challenge = build_challenge_set(corpus, Perturbation("reverse"))
        for rec in challenge.records:
            assert rec.candidates[0] == rec.source[::-1]

    def test_truncate_halves_mean_length(self):
        corpus = _distinct_corpus(3, 30, lo=8, hi=8)
        challenge = build_challenge_set(corpus, Perturbation("truncate", ratio=0.5))
        mean_src = sum(len(r.source) for r in corpus.records) / 30
        mean_cand = sum(len(r.candidates[0]) for r in challenge.records) / 30
        assert mean_cand == pytest.approx(mean_src / 2)


class TestChallengeGeometry:
    def test_parrot_zeroes_rouge_p_pinc_and_ter_vs_source(self):
        corpus = _distinct_corpus(4, 15)
        bench = compute_benchmark(corpus)
        challenge = build_challenge_set(corpus, Perturbation("parrot"))
        for rec in challenge.records:
            cand = rec.candidates[0]
            assert rouge_p_sentence(cand, rec.source, bench).score == 0.0
            assert pinc(rec.source, cand) == 0.0
            assert ter(cand, [rec.source]) == 0.0

    def test_reverse_keeps_pinc_low_while_src_rouge_l_collapses(self):
        # The novelty blind spot: token reversal leaves 1/4 of the PINC
        # orders (the unigrams) fully shared, so PINC caps at 0.75, while
        # the LCS-based score sees the destroyed order.
        corpus = _distinct_corpus(5, 20)
        challenge = build_challenge_set(corpus, Perturbation("reverse"))
        for rec in challenge.records:
            cand = rec.candidates[0]
            assert pinc(rec.source, cand) == 0.75
            assert rouge_l(cand, [rec.source]) < rouge_l(rec.source, [rec.source])
            assert pinc(rec.source, cand) < 1.0  # below the disjoint baseline

    def test_truncate_keeps_lenpen_at_one_and_recall_at_ratio(self):
        # Even source lengths, distinct tokens: recall equals the ratio exactly.
        corpus = _distinct_corpus(6, 15, lo=8, hi=8)
        challenge = build_challenge_set(corpus, Perturbation("truncate", ratio=0.5))
        bench = compute_benchmark(corpus)
        for rec in challenge.records:
            cand = rec.candidates[0]
            bd = rouge_p_sentence(cand, rec.source, bench)
            assert bd.lenpen == 1.0
            assert bd.src_rouge_1 == 0.5
            assert rouge_n(cand, [rec.source], 1) == 0.5


class TestContrastReport:
    def test_rows_share_the_unperturbed_benchmark(self):
        corpus = _distinct_corpus(7, 12)
        bench = compute_benchmark(corpus)
        rows = metric_contrast_report(
            corpus,
            [Perturbation("parrot"), Perturbation("reverse")],
        )
        assert [p.kind for p, _ in rows] == ["parrot", "reverse"]
        for _, report in rows:
            assert report.benchmark == bench

    def test_parrot_row_zero_rouge_p_full_unigram_overlap(self):
        corpus = _distinct_corpus(8, 12)
        rows = dict(
            (p.kind, r)
            for p, r in metric_contrast_report(corpus, [Perturbation("parrot")])
        )
        parrot = rows["parrot"]
        assert parrot.rouge_p == 0.0
        assert parrot.src_rouge_1 == 1.0
        assert parrot.pinc == 0.0
        assert parrot.src_rouge_l == 1.0

    def test_reverse_row_pinc_pinned_at_three_quarters(self):
        corpus = _distinct_corpus(9, 12)
        rows = dict(
            (p.kind, r)
            for p, r in metric_contrast_report(corpus, [Perturbation("reverse")])
        )
        assert rows["reverse"].pinc == 0.75
        assert rows["reverse"].src_rouge_l < 0.5
