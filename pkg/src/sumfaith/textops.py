"""Deterministic text primitives: sentence splitting, tokenization, n-grams.

Everything in this module is a pure function of its inputs, so results are
reproducible across runs and safe to compute concurrently.
"""

from __future__ import annotations

import re
import string
import unicodedata
from collections import Counter
from dataclasses import dataclass

# Numbers with internal commas/periods ("60,000", "3.5") stay one token;
# other word runs and single punctuation marks are their own tokens.
_TOKEN_RE = re.compile(r"\d+(?:[.,]\d+)+|\w+|[^\w\s]")

# Terminator followed by whitespace+uppercase ends a sentence unless the
# word before the period is on this list.
_ABBREVIATIONS = {
    "mr.", "mrs.", "ms.", "dr.", "st.", "vs.", "etc.", "e.g.", "i.e.",
    "u.s.", "u.k.",
}
_TERMINATORS = {".", "?", "!"}

_PUNCT_CHARS = set(string.punctuation)
_ARTICLES = {"a", "an", "the"}


@dataclass(frozen=True)
class Sentence:
    """One sentence of a document with its 0-based position."""

    text: str
    index: int


def surface_tokens(text: str) -> list[str]:
    """Tokenize without case folding (for capitalization-sensitive rules)."""
    return _TOKEN_RE.findall(unicodedata.normalize("NFC", text))


def tokenize(text: str) -> list[str]:
    """Lowercased tokens; punctuation standalone, digit groups kept whole."""
    return [t.lower() for t in surface_tokens(text)]


def detokenize(tokens: list[str]) -> str:
    """Join tokens with spaces, reattaching punctuation to its neighbor."""
    out = ""
    for tok in tokens:
        if not out:
            out = tok
        elif tok and all(ch in _PUNCT_CHARS for ch in tok) and tok not in ("(", "["):
            out += tok
        elif out.endswith(("(", "[")):
            out += tok
        else:
            out += " " + tok
    return out


def normalize_answer(text: str) -> list[str]:
    """Lowercase, strip punctuation, drop articles, split on whitespace."""
    t = unicodedata.normalize("NFC", text).lower()
    t = "".join(ch for ch in t if ch not in _PUNCT_CHARS)
    return [tok for tok in t.split() if tok not in _ARTICLES]


def _abbreviation_before(text: str, dot: int) -> bool:
    # Word ending at text[dot] == '.', including internal dots ("u.s.").
    j = dot - 1
    while j >= 0 and (text[j].isalnum() or text[j] == "."):
        j -= 1
    return text[j + 1 : dot + 1].lower() in _ABBREVIATIONS


def split_sentences(text: str) -> list[Sentence]:
    """Split on {. ? !} followed by whitespace and an uppercase letter.

    A fixed abbreviation list suppresses false splits after titles like
    "Mr." and "Dr.". The concatenated sentence texts reproduce the input
    up to inter-sentence whitespace.
    """
    sentences: list[Sentence] = []
    n = len(text)
    start = 0

    def commit(end: int) -> None:
        chunk = text[start:end].strip()
        if chunk:
            sentences.append(Sentence(chunk, len(sentences)))

    i = 0
    while i < n:
        ch = text[i]
        if ch in _TERMINATORS:
            if ch == "." and _abbreviation_before(text, i):
                i += 1
                continue
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            if j > i + 1 and j < n and text[j].isupper():
                commit(i + 1)
                start = j
                i = j
                continue
        i += 1
    commit(n)
    return sentences


def ngrams(tokens: list[str], n: int) -> Counter[tuple[str, ...]]:
    """Multiset of the n-grams of ``tokens``."""
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))
