"""Heuristic answer-span extraction from a sentence.

Stands in for a parser/NER pipeline with deterministic surface rules:
capitalized runs for people and entities, month/year patterns for dates,
number+unit for durations, bare numerals, and determiner-led noun phrases.
The interface is pluggable, so a model-backed extractor can substitute the
same span shape.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from ..textops import Sentence, detokenize, surface_tokens

_NUMERAL_RE = re.compile(r"\d+(?:[.,]\d+)*")
_YEAR_RE = re.compile(r"[12]\d{3}")

_MONTHS = {
    "january", "february", "march", "april", "may", "june", "july",
    "august", "september", "october", "november", "december",
}
_TIME_UNITS = {
    "second", "seconds", "minute", "minutes", "hour", "hours", "day", "days",
    "week", "weeks", "month", "months", "year", "years", "decade", "decades",
}
_NUMBER_WORDS = {
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty", "thirty", "forty", "fifty",
    "sixty", "seventy", "eighty", "ninety", "hundred", "thousand", "million",
    "billion",
}
_TITLES = {"mr", "mrs", "ms", "miss", "dr", "prof"}
_DETERMINERS = {
    "the", "a", "an", "this", "that", "these", "those",
    "his", "her", "its", "their", "our", "my", "your",
}
# Capitalized function words never start a name run (covers sentence-initial
# "The", "It", "However", ...).
_FUNCTION_WORDS = _DETERMINERS | {
    "i", "you", "he", "she", "it", "we", "they", "there", "here",
    "who", "what", "when", "where", "why", "how", "which",
    "and", "but", "or", "nor", "so", "yet", "if", "as", "because", "since",
    "while", "although", "though", "until", "unless", "once", "when",
    "at", "by", "for", "from", "in", "into", "of", "on", "to", "with",
    "over", "under", "after", "before", "about", "against", "between",
    "during", "through", "up", "down", "off", "out",
    "is", "are", "was", "were", "am", "be", "been", "being",
    "has", "have", "had", "do", "does", "did",
    "will", "would", "can", "could", "shall", "should", "may", "might",
    "must", "not", "no", "yes",
    "however", "meanwhile", "moreover", "also", "then", "now", "just",
    "some", "all", "any", "each", "every", "both", "more", "most", "other",
    "such", "only", "even", "still", "too", "very",
}
# Common adjectives allowed between a determiner and its noun.
_COMMON_ADJECTIVES = {
    "new", "old", "big", "small", "good", "bad", "first", "last", "local",
    "major", "minor", "young", "little", "long", "short", "high", "low",
    "late", "early", "former", "senior", "junior", "black", "white", "red",
    "royal", "famous", "important",
}


class AnswerType(enum.Enum):
    PERSON = "person"
    DATE = "date"
    DURATION = "duration"
    NUMBER = "number"
    LOCATION = "location"
    ENTITY = "entity"
    PHRASE = "phrase"


@dataclass(frozen=True)
class AnswerSpan:
    text: str
    token_range: tuple[int, int]
    answer_type: AnswerType


def _is_numeral(tok: str) -> bool:
    return _NUMERAL_RE.fullmatch(tok) is not None


def _is_year(tok: str) -> bool:
    return _YEAR_RE.fullmatch(tok) is not None


def _is_capitalized(tok: str) -> bool:
    return tok[0].isupper() and tok.isalpha()


def _is_title_case(tok: str) -> bool:
    return tok[0].isupper() and tok[1:].islower() and tok.isalpha()


def _match_date(tokens: list[str], i: int) -> tuple[int, AnswerType] | None:
    tok = tokens[i]
    if tok.lower() in _MONTHS and _is_capitalized(tok):
        end = i + 1
        if end < len(tokens) and _is_numeral(tokens[end]) and not _is_year(tokens[end]):
            end += 1
        if (
            end + 1 < len(tokens)
            and tokens[end] == ","
            and _is_year(tokens[end + 1])
        ):
            end += 2
        elif end < len(tokens) and _is_year(tokens[end]):
            end += 1
        return end, AnswerType.DATE
    if _is_year(tok):
        return i + 1, AnswerType.DATE
    return None


def _match_duration(tokens: list[str], i: int) -> tuple[int, AnswerType] | None:
    tok = tokens[i].lower()
    if (_is_numeral(tokens[i]) or tok in _NUMBER_WORDS) and i + 1 < len(tokens):
        if tokens[i + 1].lower() in _TIME_UNITS:
            return i + 2, AnswerType.DURATION
    return None


def _match_number(tokens: list[str], i: int) -> tuple[int, AnswerType] | None:
    if _is_numeral(tokens[i]):
        return i + 1, AnswerType.NUMBER
    return None


def _match_name_run(tokens: list[str], i: int) -> tuple[int, AnswerType] | None:
    start = i
    has_title = False
    if tokens[i].lower() in _TITLES and _is_capitalized(tokens[i]):
        has_title = True
        i += 1
        if i < len(tokens) and tokens[i] == ".":
            i += 1
    run_start = i
    while (
        i < len(tokens)
        and _is_capitalized(tokens[i])
        and tokens[i].lower() not in _FUNCTION_WORDS
        and tokens[i].lower() not in _MONTHS
    ):
        i += 1
    if i == run_start:
        return None
    if sum(len(t) for t in tokens[run_start:i]) < 2:
        return None
    if has_title or all(_is_title_case(t) for t in tokens[run_start:i]):
        return i, AnswerType.PERSON
    return i, AnswerType.ENTITY


def _match_phrase(tokens: list[str], i: int) -> tuple[int, AnswerType] | None:
    if tokens[i].lower() not in _DETERMINERS:
        return None
    j = i + 1
    while (
        j < len(tokens)
        and tokens[j].isalpha()
        and tokens[j].islower()
        and tokens[j] in _COMMON_ADJECTIVES
    ):
        j += 1
    if (
        j < len(tokens)
        and tokens[j].isalpha()
        and tokens[j].islower()
        and tokens[j] not in _FUNCTION_WORDS
        and not tokens[j].endswith("ly")
    ):
        return j + 1, AnswerType.PHRASE
    return None


_MATCHERS = (_match_date, _match_duration, _match_number, _match_name_run, _match_phrase)


def extract_answer_spans(sentence: Sentence | str, max_spans: int = 10) -> list[AnswerSpan]:
    """Non-overlapping candidate answer spans, scanned left to right."""
    if max_spans < 1:
        raise ValueError(f"max_spans must be >= 1, got {max_spans}")
    text = sentence.text if isinstance(sentence, Sentence) else sentence
    tokens = surface_tokens(text)
    spans: list[AnswerSpan] = []
    i = 0
    while i < len(tokens) and len(spans) < max_spans:
        matched = None
        for matcher in _MATCHERS:
            matched = matcher(tokens, i)
            if matched is not None:
                break
        if matched is None:
            i += 1
            continue
        end, answer_type = matched
        spans.append(
            AnswerSpan(
                text=detokenize(tokens[i:end]),
                token_range=(i, end),
                answer_type=answer_type,
            )
        )
        i = end
    return spans
