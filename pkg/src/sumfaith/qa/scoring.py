"""Faithfulness scoring: generate questions from a summary sentence, answer
them from the document, and average token-level F1 against the masked spans.

An unanswerable verdict counts as a wrong answer (F1 = 0). Sentences that
yield no questions are reported as such rather than scored zero, so callers
can exclude them from corpus means.
"""

from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..textops import Sentence, normalize_answer
from .backends import QAAnswer
from .questions import QAPair, QuestionGenerationError, generate_question
from .spans import extract_answer_spans


class ScoreStatus(enum.Enum):
    SCORED = "scored"
    NO_QUESTIONS = "no_questions"


@dataclass(frozen=True)
class QuestionResult:
    pair: QAPair
    answer: QAAnswer
    f1: float


@dataclass(frozen=True)
class FaithfulnessScore:
    value: float
    per_question: tuple[QuestionResult, ...]
    status: ScoreStatus


def token_f1(gold: str, predicted: str) -> float:
    """Bag-of-tokens F1 over normalized answers (both empty scores 1)."""
    g = normalize_answer(gold)
    p = normalize_answer(predicted)
    if not g and not p:
        return 1.0
    if not g or not p:
        return 0.0
    same = sum((Counter(g) & Counter(p)).values())
    if same == 0:
        return 0.0
    precision = same / len(p)
    recall = same / len(g)
    return 2 * precision * recall / (precision + recall)


def build_qa_pairs(sentence: Sentence | str, max_spans: int = 10) -> list[QAPair]:
    """Question/answer pairs for every maskable span of the sentence.

    Spans the grammar cannot question are skipped; duplicate
    (question, answer) pairs are collapsed so repeated mentions of the same
    fact are not double-weighted.
    """
    text = sentence.text if isinstance(sentence, Sentence) else sentence
    pairs: list[QAPair] = []
    seen: set[tuple[str, str]] = set()
    for span in extract_answer_spans(text, max_spans):
        try:
            pair = generate_question(text, span)
        except QuestionGenerationError:
            continue
        key = (pair.question, pair.gold_answer.text)
        if key in seen:
            continue
        seen.add(key)
        pairs.append(pair)
    return pairs


def feqa_score(
    sentence: Sentence | str,
    document: str,
    backend,
    max_spans: int = 10,
    concurrency: int = 1,
) -> FaithfulnessScore:
    """Mean token-F1 of the backend's answers against the summary's spans.

    ``concurrency`` bounds in-flight backend calls; results are aggregated
    by question order, so the value is independent of scheduling. Backend
    errors propagate to the caller.
    """
    if not document.strip():
        raise ValueError("document must be non-empty")
    pairs = build_qa_pairs(sentence, max_spans)
    if not pairs:
        return FaithfulnessScore(0.0, (), ScoreStatus.NO_QUESTIONS)

    if concurrency > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=concurrency) as pool:
            answers = list(pool.map(lambda p: backend.answer(p.question, document), pairs))
    else:
        answers = [backend.answer(p.question, document) for p in pairs]

    results = tuple(
        QuestionResult(
            pair=pair,
            answer=ans,
            f1=0.0 if ans.unanswerable else token_f1(pair.gold_answer.text, ans.answer_text),
        )
        for pair, ans in zip(pairs, answers)
    )
    value = sum(r.f1 for r in results) / len(results)
    return FaithfulnessScore(value, results, ScoreStatus.SCORED)
