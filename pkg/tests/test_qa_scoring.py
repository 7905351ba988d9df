from __future__ import annotations

import random

import pytest

from oracles import oracle_token_f1
from sumfaith.qa.backends import LexicalBackend, QAAnswer
from sumfaith.qa.scoring import (
    FaithfulnessScore,
    ScoreStatus,
    build_qa_pairs,
    feqa_score,
    token_f1,
)


# -- token_f1 ------------------------------------------------------------------


def test_f1_identity():
    assert token_f1("six months", "six months") == 1.0


def test_f1_disjoint():
    assert token_f1("Dean Marney", "Ross Wallace") == 0.0


def test_f1_partial_overlap():
    got = token_f1("Donald Trump", "the President of the United States Donald Trump")
    assert got == pytest.approx(0.5)


def test_f1_empty_cases():
    assert token_f1("", "") == 1.0
    assert token_f1("x", "") == 0.0
    assert token_f1("", "x") == 0.0
    # article-only strings normalize to empty
    assert token_f1("the", "a") == 1.0


def test_f1_symmetric_and_bounded():
    rng = random.Random(83)
    words = ["the", "old", "bridge", "fell", "in", "1984", "Paris", "six", "months", "!"]
    for _ in range(100):
        a = " ".join(rng.choices(words, k=rng.randint(0, 6)))
        b = " ".join(rng.choices(words, k=rng.randint(0, 6)))
        f = token_f1(a, b)
        assert 0.0 <= f <= 1.0
        assert f == pytest.approx(token_f1(b, a))


def test_f1_matches_bag_overlap_oracle():
    rng = random.Random(89)
    words = ["the", "cat", "sat", "Mayor", "2019", "very", "tall", "tower", "on"]
    for _ in range(100):
        a = " ".join(rng.choices(words, k=rng.randint(0, 8)))
        b = " ".join(rng.choices(words, k=rng.randint(0, 8)))
        assert token_f1(a, b) == pytest.approx(oracle_token_f1(a, b), abs=1e-12)


# -- build_qa_pairs -------------------------------------------------------------


def test_pairs_skip_unquestionable_spans():
    pairs = build_qa_pairs("Sally the winner")
    assert pairs == []


def test_pairs_deduplicate_identical_questions():
    # both "the cake" mentions produce the same (question, gold) pair
    pairs = build_qa_pairs("The dog ate the cake near the cake")
    keys = [(p.question, p.gold_answer.text) for p in pairs]
    assert len(keys) == len(set(keys))


def test_pairs_for_simple_sentence():
    pairs = build_qa_pairs("Alice Brown visited Paris in 1984.")
    questions = [p.question for p in pairs]
    assert "Who visited Paris in 1984?" in questions
    assert "When did Alice Brown visit Paris?" in questions


# -- feqa_score ------------------------------------------------------------------


def test_verbatim_copy_scores_one():
    doc = "Alice Brown visited Paris in 1984. Carol Smith won the contest in 1999."
    score = feqa_score("Alice Brown visited Paris in 1984.", doc, LexicalBackend())
    assert score.status is ScoreStatus.SCORED
    assert score.value == pytest.approx(1.0)


def test_all_unanswerable_scores_zero():
    class NoBackend:
        def answer(self, question, context):
            return QAAnswer("", True, 0.0)

    doc = "Alice Brown visited Paris in 1984."
    score = feqa_score("Alice Brown visited Paris in 1984.", doc, NoBackend())
    assert score.status is ScoreStatus.SCORED
    assert score.value == 0.0
    assert all(r.f1 == 0.0 for r in score.per_question)


def test_mixed_answers_average():
    class HalfBackend:
        def __init__(self):
            self.flip = False

        def answer(self, question, context):
            self.flip = not self.flip
            if self.flip:
                return QAAnswer("totally wrong", False, 0.5)
            return QAAnswer("", True, 0.0)

    doc = "Alice Brown visited Paris in 1984."
    sent = "Alice Brown visited Paris in 1984."
    score = feqa_score(sent, doc, HalfBackend())
    f1s = [r.f1 for r in score.per_question]
    assert score.value == pytest.approx(sum(f1s) / len(f1s))


def test_value_equals_mean_of_breakdown():
    doc = (
        "Alice Brown visited Paris in 1984. Carol Smith won the contest in 1999. "
        "David Jones opened the museum in 2003."
    )
    score = feqa_score("Carol Smith opened the museum in 1984.", doc, LexicalBackend())
    assert score.status is ScoreStatus.SCORED
    assert score.value == pytest.approx(
        sum(r.f1 for r in score.per_question) / len(score.per_question)
    )


def test_no_questions_status():
    score = feqa_score("it rained", "It rained all day. Streets flooded.", LexicalBackend())
    assert score.status is ScoreStatus.NO_QUESTIONS
    assert score.per_question == ()


def test_rejects_empty_document():
    with pytest.raises(ValueError):
        feqa_score("Alice ran", "   ", LexicalBackend())


def test_unanswerable_truncates_to_zero_even_with_text_match():
    # unanswerable always counts as wrong, regardless of any stale answer text
    class Unanswerable:
        def answer(self, question, context):
            return QAAnswer("", True, 0.9)

    score = feqa_score(
        "Alice Brown visited Paris.", "Alice Brown visited Paris.", Unanswerable()
    )
    assert score.value == 0.0


def test_concurrent_scoring_matches_serial():
    doc = (
        "Alice Brown visited Paris in 1984. Carol Smith won the contest in 1999. "
        "David Jones opened the museum in 2003."
    )
    sent = "Alice Brown visited Paris in 1984."
    serial = feqa_score(sent, doc, LexicalBackend(), concurrency=1)
    threaded = feqa_score(sent, doc, LexicalBackend(), concurrency=8)
    assert serial == threaded


def test_entity_swap_scores_strictly_lower():
    doc = (
        "Alice Brown visited Paris in 1984. Carol Smith won the contest in 1999. "
        "David Jones opened the museum in 2003."
    )
    backend = LexicalBackend()
    faithful = feqa_score("Alice Brown visited Paris in 1984.", doc, backend)
    swapped = feqa_score("Carol Smith visited Paris in 1984.", doc, backend)
    assert swapped.value < faithful.value


def test_score_is_deterministic():
    doc = "Alice Brown visited Paris in 1984. Carol Smith won the contest in 1999."
    sent = "Alice Brown won the contest in 1984."
    a = feqa_score(sent, doc, LexicalBackend())
    b = feqa_score(sent, doc, LexicalBackend())
    assert a == b


def test_faithfulness_score_shape():
    score = FaithfulnessScore(0.0, (), ScoreStatus.NO_QUESTIONS)
    assert score.per_question == ()
