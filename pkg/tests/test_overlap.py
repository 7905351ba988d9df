from __future__ import annotations

import random

import pytest

from oracles import oracle_bleu, oracle_rouge_l, oracle_rouge_n
from sumfaith.overlap import (
    MetricScore,
    bleu,
    lcs_length,
    rouge_l,
    rouge_n,
    score_vs_reference,
    score_vs_source,
    sentence_metric,
)

CAT_SAT = "the cat sat on the mat".split()
CAT_LAY = "the cat lay on the mat".split()


def _random_pair(rng: random.Random, vocab="abcdefgh"):
    cand = [rng.choice(vocab) for _ in range(rng.randint(1, 30))]
    ref = [rng.choice(vocab) for _ in range(rng.randint(1, 30))]
    return cand, ref


# -- rouge_n -------------------------------------------------------------------


def test_rouge_n_identity():
    prf = rouge_n(CAT_SAT, CAT_SAT, 1)
    assert (prf.precision, prf.recall, prf.f1) == (1.0, 1.0, 1.0)


def test_rouge_2_golden_pair():
    prf = rouge_n(CAT_SAT, CAT_LAY, 2)
    assert prf.precision == pytest.approx(0.6)
    assert prf.recall == pytest.approx(0.6)
    assert prf.f1 == pytest.approx(0.6)


def test_rouge_n_disjoint_is_zero():
    assert rouge_n(["a", "b"], ["x", "y"], 1).f1 == 0.0


def test_rouge_n_rejects_bad_order():
    with pytest.raises(ValueError):
        rouge_n(["a"], ["a"], 0)


def test_rouge_n_matches_oracle():
    rng = random.Random(101)
    for _ in range(150):
        cand, ref = _random_pair(rng)
        n = rng.randint(1, 3)
        got = rouge_n(cand, ref, n)
        want = oracle_rouge_n(cand, ref, n)
        assert got.precision == pytest.approx(want[0], abs=1e-12)
        assert got.recall == pytest.approx(want[1], abs=1e-12)
        assert got.f1 == pytest.approx(want[2], abs=1e-12)


def test_rouge_n_f1_symmetric():
    rng = random.Random(17)
    for _ in range(100):
        cand, ref = _random_pair(rng)
        assert rouge_n(cand, ref, 2).f1 == pytest.approx(rouge_n(ref, cand, 2).f1)


# -- rouge_l -------------------------------------------------------------------


def test_rouge_l_identity():
    assert rouge_l(CAT_SAT, CAT_SAT).f1 == 1.0


def test_rouge_l_golden_pair():
    prf = rouge_l(CAT_SAT, CAT_LAY)
    assert prf.f1 == pytest.approx(5 / 6)
    assert prf.precision == pytest.approx(5 / 6)


def test_rouge_l_empty_is_zero():
    assert rouge_l([], CAT_SAT).f1 == 0.0
    assert rouge_l(CAT_SAT, []).f1 == 0.0


def test_rouge_l_matches_oracle():
    rng = random.Random(23)
    for _ in range(150):
        cand, ref = _random_pair(rng)
        got = rouge_l(cand, ref)
        want = oracle_rouge_l(cand, ref)
        assert got.f1 == pytest.approx(want[2], abs=1e-12)


def test_lcs_bounds_and_exactness():
    rng = random.Random(29)
    for _ in range(100):
        cand, ref = _random_pair(rng)
        lcs = lcs_length(cand, ref)
        assert lcs <= min(len(cand), len(ref))
        assert rouge_l(cand, ref).f1 == pytest.approx(1.0) if cand == ref else True
    # F = 1 only for identical sequences
    assert rouge_l(["a", "b"], ["b", "a"]).f1 < 1.0


# -- bleu ----------------------------------------------------------------------


def test_bleu_identity():
    assert bleu(CAT_SAT, CAT_SAT) == pytest.approx(1.0)


def test_bleu_empty_candidate():
    assert bleu([], CAT_SAT) == 0.0


def test_bleu_golden_pair_matches_oracle():
    cand = ["a", "b", "c", "d", "e"]
    ref = ["a", "b", "c", "x", "y"]
    assert bleu(cand, ref) == pytest.approx(oracle_bleu(cand, ref), abs=1e-12)


def test_bleu_matches_oracle_randomized():
    rng = random.Random(31)
    for _ in range(150):
        cand, ref = _random_pair(rng)
        assert bleu(cand, ref) == pytest.approx(oracle_bleu(cand, ref), rel=1e-9)


def test_bleu_range():
    rng = random.Random(37)
    for _ in range(100):
        cand, ref = _random_pair(rng)
        assert 0.0 <= bleu(cand, ref) <= 1.0


def test_bleu_reference_prefix_never_lowers_unigram_matches():
    rng = random.Random(41)
    for _ in range(50):
        cand, ref = _random_pair(rng)
        def unigram_matches(c):
            got = oracle_rouge_n(c, ref, 1)
            return round(got[0] * len(c))
        assert unigram_matches(ref + cand) >= unigram_matches(cand)


def test_bleu_rejects_bad_order():
    with pytest.raises(ValueError):
        bleu(["a"], ["a"], max_order=0)


# -- aggregation over sources -----------------------------------------------------


def test_score_vs_source_max_hits_identity():
    sources = [["x", "y"], CAT_SAT, ["q"]]
    score = score_vs_source(CAT_SAT, sources, "rouge1", "max")
    assert score.value == pytest.approx(1.0)
    assert score.aggregation == "max"


def test_score_vs_source_avg_is_mean():
    sources = [["x", "y"], CAT_SAT, ["q"]]
    per = [sentence_metric("rouge1", CAT_SAT, s) for s in sources]
    score = score_vs_source(CAT_SAT, sources, "rouge1", "avg")
    assert score.value == pytest.approx(sum(per) / len(per))


def test_avg_never_exceeds_max():
    rng = random.Random(43)
    for _ in range(50):
        summary = [rng.choice("abcd") for _ in range(rng.randint(1, 10))]
        sources = [
            [rng.choice("abcd") for _ in range(rng.randint(1, 10))]
            for _ in range(rng.randint(1, 5))
        ]
        for metric in ("rouge1", "rouge2", "rougeL", "bleu4"):
            avg = score_vs_source(summary, sources, metric, "avg").value
            mx = score_vs_source(summary, sources, metric, "max").value
            assert avg <= mx + 1e-12


def test_score_vs_source_rejects_empty_sources():
    with pytest.raises(ValueError):
        score_vs_source(CAT_SAT, [], "rouge1")


def test_score_vs_source_rejects_unknown_aggregation():
    with pytest.raises(ValueError):
        score_vs_source(CAT_SAT, [CAT_SAT], "rouge1", "median")


def test_sentence_metric_rejects_unknown_name():
    with pytest.raises(ValueError):
        sentence_metric("rouge9", CAT_SAT, CAT_SAT)


# -- reference-based scores --------------------------------------------------------


def test_score_vs_reference_identity():
    scores = score_vs_reference(CAT_SAT, CAT_SAT)
    assert [s.metric for s in scores] == ["rouge1", "rouge2", "rougeL"]
    assert all(s.value == pytest.approx(1.0) for s in scores)
    assert all(s.aggregation == "none" for s in scores)


def test_score_vs_reference_disjoint():
    scores = score_vs_reference(["a", "b"], ["x", "y"])
    assert all(s.value == 0.0 for s in scores)


def test_score_vs_reference_consistent_with_ops():
    scores = {s.metric: s.value for s in score_vs_reference(CAT_SAT, CAT_LAY)}
    assert scores["rouge2"] == pytest.approx(rouge_n(CAT_SAT, CAT_LAY, 2).f1)
    assert scores["rougeL"] == pytest.approx(rouge_l(CAT_SAT, CAT_LAY).f1)


def test_score_vs_reference_requires_reference():
    with pytest.raises(ValueError):
        score_vs_reference(CAT_SAT, None)


def test_metric_score_shape():
    score = MetricScore("rouge1", 0.5, "avg")
    assert (score.metric, score.value, score.aggregation) == ("rouge1", 0.5, "avg")
