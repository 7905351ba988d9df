"""Rule-based transformation of a declarative sentence into a question.

A masked span in subject position is replaced in place by the wh-word.
A masked span after the main verb moves the wh-word to the front, reusing
the sentence's auxiliary when it has one and falling back to do-support
with a suffix-based lemmatizer otherwise. Sentences the rules cannot
handle raise ``QuestionGenerationError`` and are skipped by callers.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..textops import Sentence, detokenize, normalize_answer, surface_tokens
from .spans import AnswerSpan, AnswerType

_AUXILIARIES = {
    "is", "are", "was", "were", "am", "be", "been", "being",
    "has", "have", "had", "do", "does", "did",
    "can", "could", "will", "would", "shall", "should", "may", "might", "must",
}
_PREPOSITIONS = {
    "in", "on", "at", "by", "to", "from", "into", "onto", "near",
    "during", "around", "inside", "within",
}
_SENTENCE_FINAL_PUNCT = {".", "!", "?", ";"}
# Words safe to lowercase when they lose sentence-initial position.
_LOWERCASE_WHEN_MOVED = {
    "the", "a", "an", "this", "that", "these", "those", "it", "he", "she",
    "they", "we", "you", "i", "there", "his", "her", "its", "their", "our",
    "my", "your", "some", "all", "one", "two", "after", "before", "when",
    "while", "during", "in", "on", "at", "by", "however", "meanwhile",
}
_IRREGULAR_PAST = {
    "ate": "eat", "became": "become", "began": "begin", "bought": "buy",
    "broke": "break", "brought": "bring", "built": "build", "came": "come",
    "chose": "choose", "did": "do", "drew": "draw", "drove": "drive",
    "fell": "fall", "felt": "feel", "flew": "fly", "found": "find",
    "gave": "give", "got": "get", "grew": "grow", "had": "have",
    "heard": "hear", "held": "hold", "hit": "hit", "kept": "keep",
    "knew": "know", "led": "lead", "left": "leave", "lost": "lose",
    "made": "make", "met": "meet", "paid": "pay", "put": "put",
    "ran": "run", "read": "read", "rose": "rise", "said": "say",
    "sat": "sit", "saw": "see", "sent": "send", "set": "set",
    "sold": "sell", "spent": "spend", "spoke": "speak", "stood": "stand",
    "took": "take", "thought": "think", "threw": "throw", "told": "tell",
    "went": "go", "won": "win", "wore": "wear", "wrote": "write",
}
_IRREGULAR_THIRD = {"has": "have", "is": "be", "does": "do", "says": "say"}


class QuestionGenerationError(Exception):
    """The rule set could not build a well-formed question."""


@dataclass(frozen=True)
class QAPair:
    question: str
    gold_answer: AnswerSpan
    source_sentence: str


def _strip_ed(verb: str) -> str:
    if verb.endswith("ied") and len(verb) > 4:
        return verb[:-3] + "y"
    if verb.endswith("ed") and len(verb) > 3:
        stem = verb[:-2]
        if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in "lsz":
            return stem[:-1]
        return stem
    return verb


def _strip_s(verb: str) -> str:
    if verb.endswith("ies") and len(verb) > 4:
        return verb[:-3] + "y"
    if verb.endswith(("ses", "xes", "zes", "ches", "shes", "oes")):
        return verb[:-2]
    if verb.endswith("s") and len(verb) > 2:
        return verb[:-1]
    return verb


def _main_verb_index(tokens: list[str]) -> int | None:
    # Never sentence-initial: a leading verb form is an imperative or noise.
    for i in range(1, len(tokens)):
        low = tokens[i].lower()
        if not tokens[i].isalpha() or not tokens[i].islower():
            continue
        if low in _IRREGULAR_PAST or low in _IRREGULAR_THIRD:
            return i
        if low.endswith("ed") and len(low) > 3:
            return i
    return None


def _wh_word(span: AnswerSpan, tokens: list[str]) -> str:
    kind = span.answer_type
    if kind is AnswerType.PERSON:
        return "Who"
    if kind is AnswerType.DATE:
        return "When"
    if kind is AnswerType.DURATION:
        return "How long"
    if kind is AnswerType.LOCATION:
        return "Where"
    if kind is AnswerType.NUMBER:
        after = span.token_range[1]
        if after < len(tokens) and tokens[after].isalpha():
            return "How many"
        return "How much"
    return "What"


def _trim_final_punct(tokens: list[str]) -> list[str]:
    out = list(tokens)
    while out and out[-1] in _SENTENCE_FINAL_PUNCT:
        out.pop()
    return out


def _demote_initial(tokens: list[str]) -> list[str]:
    if tokens and tokens[0].lower() in _LOWERCASE_WHEN_MOVED:
        return [tokens[0].lower()] + tokens[1:]
    return tokens


def _check_no_leak(question: str, span: AnswerSpan) -> None:
    if span.text and span.text in question:
        raise QuestionGenerationError("gold answer appears verbatim in question")
    gold = set(normalize_answer(span.text))
    if gold and gold <= set(normalize_answer(question)):
        raise QuestionGenerationError("all gold answer tokens appear in question")


def generate_question(sentence: Sentence | str, span: AnswerSpan) -> QAPair:
    """Build the wh-question whose answer is the masked span."""
    text = sentence.text if isinstance(sentence, Sentence) else sentence
    tokens = surface_tokens(text)
    start, end = span.token_range
    if not (0 <= start < end <= len(tokens)):
        raise ValueError(f"span range {span.token_range} outside sentence")
    if detokenize(tokens[start:end]) != span.text:
        raise ValueError("span text does not match its token range")

    wh = _wh_word(span, tokens)
    aux_index = next(
        (i for i, t in enumerate(tokens) if t.lower() in _AUXILIARIES and not (start <= i < end)),
        None,
    )
    verb_index = aux_index if aux_index is not None else _main_verb_index(tokens)
    if verb_index is None:
        raise QuestionGenerationError("no recognizable verb")
    if start <= verb_index < end:
        raise QuestionGenerationError("span overlaps the verb")

    if start < verb_index:
        # Subject position: substitute the wh-word in place.
        question_tokens = (
            tokens[:start] + wh.split() + _trim_final_punct(tokens[end:])
        )
    elif aux_index is not None:
        subject = tokens[:aux_index]
        rest = _trim_final_punct(tokens[aux_index + 1 :])
        rest = _remove_span(rest, start - (aux_index + 1), end - (aux_index + 1), span)
        if not subject:
            raise QuestionGenerationError("no subject to front over")
        question_tokens = (
            wh.split() + [tokens[aux_index].lower()] + _demote_initial(subject) + rest
        )
    else:
        verb = tokens[verb_index].lower()
        if verb in _IRREGULAR_PAST:
            aux, lemma = "did", _IRREGULAR_PAST[verb]
        elif verb in _IRREGULAR_THIRD:
            aux, lemma = "does", _IRREGULAR_THIRD[verb]
        elif verb.endswith("ed"):
            aux, lemma = "did", _strip_ed(verb)
        elif verb.endswith("s"):
            aux, lemma = "does", _strip_s(verb)
        else:
            aux, lemma = "do", verb
        subject = tokens[:verb_index]
        tail = _trim_final_punct(tokens[verb_index + 1 :])
        tail = _remove_span(tail, start - (verb_index + 1), end - (verb_index + 1), span)
        if not subject:
            raise QuestionGenerationError("no subject to front over")
        question_tokens = wh.split() + [aux] + _demote_initial(subject) + [lemma] + tail

    question_tokens = [t for t in question_tokens if t]
    if len(question_tokens) <= len(wh.split()):
        raise QuestionGenerationError("question reduced to the wh-word alone")
    question_tokens[0] = question_tokens[0][0].upper() + question_tokens[0][1:]
    question = detokenize(question_tokens) + "?"
    _check_no_leak(question, span)
    return QAPair(question=question, gold_answer=span, source_sentence=text)


def _remove_span(
    tokens: list[str], start: int, end: int, span: AnswerSpan
) -> list[str]:
    """Drop the masked span (and a dangling preposition before a date/place)."""
    if start < 0 or end > len(tokens):
        raise QuestionGenerationError("span straddles the clause boundary")
    out = tokens[:start] + tokens[end:]
    if (
        span.answer_type in (AnswerType.DATE, AnswerType.LOCATION)
        and start > 0
        and tokens[start - 1].lower() in _PREPOSITIONS
    ):
        out = tokens[: start - 1] + tokens[end:]
    return out
