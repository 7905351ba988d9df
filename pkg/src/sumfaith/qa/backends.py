"""Question-answering backends: a deterministic lexical baseline and an
HTTP client for a remote model server speaking the shared protocol.

Protocol: POST ``{endpoint}/answer`` with ``{"question": str, "context": str}``
returns ``{"answer": str, "unanswerable": bool, "confidence": float}`` where
``answer`` is empty exactly when ``unanswerable`` is true.
"""

from __future__ import annotations

from dataclasses import dataclass

import requests

from ..textops import normalize_answer, split_sentences, surface_tokens
from .spans import AnswerSpan, AnswerType, extract_answer_spans

# Tokens ignored when measuring question/sentence overlap.
_QUERY_STOPWORDS = {
    "who", "what", "when", "where", "why", "how", "long", "many", "much",
    "which",
    "is", "are", "was", "were", "am", "be", "been", "being",
    "has", "have", "had", "do", "does", "did",
    "can", "could", "will", "would", "shall", "should", "may", "might",
    "must", "not",
    "and", "or", "but", "for", "in", "on", "at", "of", "to", "from", "by",
    "with", "as", "that", "this", "it", "its",
}

_WH_EXPECTED_TYPES: dict[str, tuple[AnswerType, ...]] = {
    "who": (AnswerType.PERSON, AnswerType.ENTITY),
    "when": (AnswerType.DATE,),
    "how long": (AnswerType.DURATION,),
    "how many": (AnswerType.NUMBER,),
    "how much": (AnswerType.NUMBER,),
    "where": (AnswerType.LOCATION, AnswerType.ENTITY),
}

_ADJACENCY_WINDOW = 3
_MIN_SENTENCE_OVERLAP = 2


class BackendError(Exception):
    """Base class for QA backend failures."""


class BackendUnavailableError(BackendError):
    """The remote backend could not be reached or refused the request."""


class MalformedResponseError(BackendError):
    """The remote backend answered outside the protocol."""


@dataclass(frozen=True)
class QAAnswer:
    answer_text: str
    unanswerable: bool
    confidence: float

    def __post_init__(self) -> None:
        if self.unanswerable != (self.answer_text == ""):
            raise ValueError("answer_text must be empty exactly when unanswerable")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence must be in [0, 1], got {self.confidence}")


def _content_tokens(text: str) -> set[str]:
    return {t for t in normalize_answer(text) if t not in _QUERY_STOPWORDS}


def _expected_types(question: str) -> tuple[AnswerType, ...]:
    low = question.lower()
    for prefix in ("how long", "how many", "how much"):
        if low.startswith(prefix):
            return _WH_EXPECTED_TYPES[prefix]
    first = low.split(None, 1)[0] if low.split() else ""
    return _WH_EXPECTED_TYPES.get(first, ())


class LexicalBackend:
    """Deterministic extractive baseline over surface overlap.

    Picks the context sentence with the greatest content-token overlap with
    the question, then returns its candidate span matching the question's
    wh-word, tie-broken by how much of the span's surrounding context also
    appears in the question, then by position.
    """

    def __init__(self, max_spans: int = 10) -> None:
        self.max_spans = max_spans

    def answer(self, question: str, context: str) -> QAAnswer:
        q_tokens = _content_tokens(question)
        sentences = split_sentences(context)
        if not sentences or not q_tokens:
            return QAAnswer("", True, 0.0)

        overlaps = [
            len(q_tokens & _content_tokens(sent.text)) for sent in sentences
        ]
        best_idx = max(range(len(sentences)), key=lambda i: (overlaps[i], -i))
        best_overlap = overlaps[best_idx]
        confidence = min(1.0, best_overlap / max(1, len(q_tokens)))
        if best_overlap < _MIN_SENTENCE_OVERLAP:
            return QAAnswer("", True, confidence)

        best_sentence = sentences[best_idx]
        spans = extract_answer_spans(best_sentence, self.max_spans)
        if not spans:
            return QAAnswer("", True, confidence)
        expected = _expected_types(question)
        candidates = [s for s in spans if s.answer_type in expected] if expected else []
        if not candidates:
            candidates = spans

        tokens = surface_tokens(best_sentence.text)
        best_span = max(
            candidates,
            key=lambda s: (self._adjacency(s, tokens, q_tokens), -s.token_range[0]),
        )
        return QAAnswer(best_span.text, False, confidence)

    @staticmethod
    def _adjacency(span: AnswerSpan, tokens: list[str], q_tokens: set[str]) -> int:
        start, end = span.token_range
        window = (
            tokens[max(0, start - _ADJACENCY_WINDOW) : start]
            + tokens[end : end + _ADJACENCY_WINDOW]
        )
        neighbors = _content_tokens(" ".join(window))
        return len(neighbors & q_tokens)


class RemoteBackend:
    """Client for a QA model server implementing the answer protocol.

    Requests are stateless, so transient transport failures are retried
    before ``BackendUnavailableError`` is raised.
    """

    def __init__(
        self,
        endpoint: str,
        timeout: float = 15.0,
        retries: int = 2,
        session: requests.Session | None = None,
    ) -> None:
        self.endpoint = endpoint.rstrip("/")
        self.timeout = timeout
        self.retries = retries
        self._session = session or requests.Session()

    def answer(self, question: str, context: str) -> QAAnswer:
        payload = {"question": question, "context": context}
        last_error: Exception | None = None
        for _ in range(self.retries + 1):
            try:
                resp = self._session.post(
                    f"{self.endpoint}/answer", json=payload, timeout=self.timeout
                )
            except requests.RequestException as exc:
                last_error = exc
                continue
            if resp.status_code >= 500:
                last_error = BackendUnavailableError(
                    f"backend returned status {resp.status_code}"
                )
                continue
            if resp.status_code != 200:
                raise BackendUnavailableError(
                    f"backend refused request with status {resp.status_code}"
                )
            return _parse_answer(resp)
        raise BackendUnavailableError(f"backend unreachable: {last_error}")

    def health(self) -> dict:
        try:
            resp = self._session.get(f"{self.endpoint}/health", timeout=self.timeout)
        except requests.RequestException as exc:
            raise BackendUnavailableError(f"backend unreachable: {exc}") from exc
        if resp.status_code != 200:
            raise BackendUnavailableError(f"health check returned {resp.status_code}")
        return resp.json()


def _parse_answer(resp: requests.Response) -> QAAnswer:
    try:
        body = resp.json()
    except ValueError as exc:
        raise MalformedResponseError(f"response is not JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise MalformedResponseError("response body must be a JSON object")
    answer = body.get("answer")
    unanswerable = body.get("unanswerable")
    confidence = body.get("confidence")
    if not isinstance(answer, str):
        raise MalformedResponseError("'answer' must be a string")
    if not isinstance(unanswerable, bool):
        raise MalformedResponseError("'unanswerable' must be a boolean")
    if not isinstance(confidence, (int, float)) or isinstance(confidence, bool):
        raise MalformedResponseError("'confidence' must be a number")
    if not 0.0 <= float(confidence) <= 1.0:
        raise MalformedResponseError(f"'confidence' out of range: {confidence}")
    if unanswerable != (answer == ""):
        raise MalformedResponseError("'answer' must be empty exactly when unanswerable")
    return QAAnswer(answer, unanswerable, float(confidence))
