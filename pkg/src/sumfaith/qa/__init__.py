"""Question-answering based faithfulness scoring."""

from .backends import (
    BackendError,
    BackendUnavailableError,
    LexicalBackend,
    MalformedResponseError,
    QAAnswer,
    RemoteBackend,
)
from .questions import QAPair, QuestionGenerationError, generate_question
from .scoring import (
    FaithfulnessScore,
    QuestionResult,
    ScoreStatus,
    build_qa_pairs,
    feqa_score,
    token_f1,
)
from .spans import AnswerSpan, AnswerType, extract_answer_spans

__all__ = [
    "AnswerSpan",
    "AnswerType",
    "BackendError",
    "BackendUnavailableError",
    "FaithfulnessScore",
    "LexicalBackend",
    "MalformedResponseError",
    "QAAnswer",
    "QAPair",
    "QuestionGenerationError",
    "QuestionResult",
    "RemoteBackend",
    "ScoreStatus",
    "build_qa_pairs",
    "extract_answer_spans",
    "feqa_score",
    "generate_question",
    "token_f1",
]
