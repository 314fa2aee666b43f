import pytest
from hypothesis import given
from hypothesis import strategies as st

from paraeval.metrics.meteor import MeteorConfig, meteor_lite

tokens = st.sampled_from(("a", "b", "c", "d", "e"))
sentences = st.lists(tokens, max_size=8).map(tuple)
nonempty = st.lists(tokens, min_size=1, max_size=8).map(tuple)


def test_identity_alignment():
    s = ("a", "b", "c", "d")
    # one chunk of four mapped unigrams: Pen = 0.5 * (1/4)^3
    assert meteor_lite(s, [s]) == pytest.approx(0.9921875)


def test_no_mapping_scores_zero():
    assert meteor_lite(("x",), [("y",)]) == 0.0


def test_multi_reference_takes_max():
    cand = ("a", "b")
    refs = [("x", "y"), ("a", "b")]
    # identical ref wins: Pen = 0.5 * (1/2)^3 = 0.0625
    assert meteor_lite(cand, refs) == pytest.approx(0.9375)


def test_stem_stage_matches_inflected_forms():
    # 'running' and 'run' only align through the stem stage
    score = meteor_lite(("running",), [("run",)])
    assert score == pytest.approx(0.5)  # F=1, one chunk of one match: Pen=0.5
    exact_only = MeteorConfig(stages=("exact",))
    assert meteor_lite(("running",), [("run",)], exact_only) == 0.0


def test_fragmentation_penalty_grows_with_chunks():
    ref = ("a", "b", "c", "d")
    contiguous = meteor_lite(("a", "b", "c", "d"), [ref])
    scrambled = meteor_lite(("d", "c", "b", "a"), [ref])
    # same mapped count, more chunks -> lower score
    assert scrambled < contiguous


def test_empty_candidate_scores_zero():
    assert meteor_lite((), [("a",)]) == 0.0


def test_requires_reference():
    with pytest.raises(ValueError):
        meteor_lite(("a",), [])


def test_config_validation():
    with pytest.raises(ValueError):
        MeteorConfig(alpha=1.0)
    with pytest.raises(ValueError):
        MeteorConfig(pen_weight=1.5)
    with pytest.raises(ValueError):
        MeteorConfig(stages=("exact", "synonym"))


@given(st.lists(nonempty, min_size=1, max_size=3), sentences)
def test_range(refs, cand):
    assert 0.0 <= meteor_lite(cand, refs) <= 1.0


@given(st.lists(nonempty, min_size=1, max_size=3), nonempty, nonempty)
def test_adding_reference_never_decreases(refs, extra, cand):
    assert meteor_lite(cand, refs + [extra]) >= meteor_lite(cand, refs)


@given(nonempty)
def test_alignment_is_one_to_one(s):
    # a candidate with one token can map at most one reference token
    cand = (s[0],)
    score = meteor_lite(cand, [s])
    assert score <= 1.0
    assert meteor_lite(cand, [cand]) == pytest.approx(0.5)
