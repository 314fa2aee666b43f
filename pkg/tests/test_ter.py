import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paraeval.metrics.ter import (
    TerConfig,
    edit_distance,
    edits_to_reference,
    ter,
)

from oracles import optimal_shift_edits

tokens = st.sampled_from(("a", "b", "c", "d"))
sentences = st.lists(tokens, max_size=6).map(tuple)
nonempty = st.lists(tokens, min_size=1, max_size=6).map(tuple)

NO_SHIFTS = TerConfig(enable_shifts=False)


class TestEditDistance:
    def test_identity(self):
        assert edit_distance(("a", "b"), ("a", "b")) == 0

    def test_insertions(self):
        assert edit_distance(("the", "cat", "sat"), ("the", "cat", "sat", "on", "mat")) == 2

    def test_empty_sides(self):
        assert edit_distance((), ("a", "b")) == 2
        assert edit_distance(("a",), ()) == 1

    @given(sentences, sentences)
    def test_symmetric_under_unit_costs(self, a, b):
        assert edit_distance(a, b) == edit_distance(b, a)

    @given(sentences, sentences, sentences)
    def test_triangle_inequality(self, a, b, c):
        assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)


class TestTer:
    def test_identity_is_zero(self):
        s = ("the", "cat", "sat")
        assert ter(s, [s]) == 0.0

    def test_three_insertions_over_six_words(self):
        cand = ("the", "cat", "sat")
        ref = ("the", "cat", "sat", "on", "the", "mat")
        assert ter(cand, [ref]) == 50.0

    def test_single_shift_beats_two_substitutions(self):
        assert ter(("b", "a", "c", "d"), [("a", "b", "c", "d")]) == 25.0

    def test_shifts_disabled_uses_plain_edit_distance(self):
        assert ter(("b", "a", "c", "d"), [("a", "b", "c", "d")], NO_SHIFTS) == 50.0

    def test_normalized_by_average_reference_length(self):
        cand = ("a", "b", "c", "d")
        refs = [("a", "b", "c", "d"), ("a", "b", "c", "d", "x", "y", "z", "w")]
        # zero edits against the first ref; average ref length 6
        assert ter(cand, refs) == 0.0
        cand2 = ("q", "b", "c", "d")
        # 1 edit against the first ref / avg len 6
        assert ter(cand2, refs) == pytest.approx(100.0 / 6)

    def test_all_empty_references_error(self):
        with pytest.raises(ValueError):
            ter(("a",), [(), ()])
        with pytest.raises(ValueError):
            ter(("a",), [])

    @given(nonempty, nonempty)
    def test_shifts_never_hurt(self, cand, ref):
        assert ter(cand, [ref]) <= ter(cand, [ref], NO_SHIFTS)

    @given(nonempty, nonempty, nonempty)
    def test_adding_reference_never_increases_the_edit_count(self, cand, ref, extra):
        # The min edit count cannot grow; the *rate* can, because a short
        # extra reference shrinks the average-length denominator.
        from paraeval.metrics.ter import ter_pair_statistics

        edits_one, _ = ter_pair_statistics(cand, [ref])
        edits_two, _ = ter_pair_statistics(cand, [ref, extra])
        assert edits_two <= edits_one

    @given(nonempty, nonempty)
    def test_adding_equal_length_reference_never_increases_the_rate(self, cand, ref):
        extra = tuple(f"z{i}" for i in range(len(ref)))
        assert ter(cand, [ref, extra]) <= ter(cand, [ref])

    @given(nonempty)
    def test_zero_iff_equal_single_ref(self, s):
        assert ter(s, [s]) == 0.0

    @given(nonempty, st.lists(nonempty, min_size=1, max_size=3))
    def test_zero_only_when_candidate_equals_a_reference(self, cand, refs):
        if ter(cand, refs) == 0.0:
            assert cand in refs
        if cand in refs:
            assert ter(cand, refs) == 0.0

    @settings(max_examples=150)
    @given(sentences, nonempty)
    def test_greedy_upper_bounds_the_exhaustive_oracle(self, cand, ref):
        greedy = edits_to_reference(cand, ref)
        assert greedy >= optimal_shift_edits(cand, ref)


def test_shift_iteration_cap_respected():
    cfg = TerConfig(max_shift_iterations=0)
    # cap of 0 means no shifts even when one would help
    assert edits_to_reference(("b", "a", "c", "d"), ("a", "b", "c", "d"), cfg) == 2


def test_config_validation():
    with pytest.raises(ValueError):
        TerConfig(max_shift_iterations=-1)


def test_agreement_rate_with_oracle_on_random_pairs():
    rng = random.Random(99)
    vocab = ["a", "b", "c", "d"]
    equal = 0
    total = 200
    for _ in range(total):
        cand = tuple(rng.choice(vocab) for _ in range(rng.randint(0, 6)))
        ref = tuple(rng.choice(vocab) for _ in range(rng.randint(1, 6)))
        greedy = edits_to_reference(cand, ref)
        opt = optimal_shift_edits(cand, ref)
        assert greedy >= opt
        equal += greedy == opt
    assert equal / total >= 0.95
