"""Copy-type classification of summary sentences and corpus profiling.

A summary sentence is labeled with the first matching category, in order of
increasing abstractiveness: exact copy of a source sentence, contiguous span
of one source sentence, word-subsequence of one source sentence, fusion of
contiguous fragments from two or more source sentences, or none of these.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .textops import Sentence, ngrams, split_sentences, tokenize

# evidence fragment: (source sentence index, half-open token span)
Fragment = tuple[int, tuple[int, int]]


class CopyKind(enum.Enum):
    SENTENCE_EXTRACTION = "sentence_extraction"
    SPAN_EXTRACTION = "span_extraction"
    WORD_EXTRACTION = "word_extraction"
    PERFECT_FUSION = "perfect_fusion"
    OTHER = "other"


@dataclass(frozen=True)
class AbstractivenessLabel:
    kind: CopyKind
    k: Optional[int] = None
    evidence: tuple[Fragment, ...] = ()


@dataclass(frozen=True)
class AbstractivenessReport:
    """Corpus-level copy-type percentages and novel n-gram rates.

    Fractions are in [0, 1]. ``fusion_k2_plus`` counts every fused sentence
    (k >= 2), so it is always >= ``fusion_k2``. Novel n-gram rates are
    micro-averaged over all summary n-grams; an order with no n-grams in the
    whole corpus maps to None.
    """

    label_fractions: dict[CopyKind, float]
    fusion_k2: float
    fusion_k2_plus: float
    novel_ngram_rates: dict[int, Optional[float]]
    sentence_count: int


def _find_sublist(needle: list[str], hay: list[str]) -> Optional[int]:
    n, m = len(needle), len(hay)
    for start in range(m - n + 1):
        if hay[start : start + n] == needle:
            return start
    return None


def _subsequence_span(needle: list[str], hay: list[str]) -> Optional[tuple[int, int]]:
    # Greedy left-to-right match; returns the covering span when it succeeds.
    first = last = -1
    j = 0
    for i, tok in enumerate(hay):
        if j < len(needle) and tok == needle[j]:
            if j == 0:
                first = i
            last = i
            j += 1
    if j == len(needle):
        return (first, last + 1)
    return None


def _match_length(summary: list[str], pos: int, source: list[str], start: int) -> int:
    l = 0
    while (
        pos + l < len(summary)
        and start + l < len(source)
        and summary[pos + l] == source[start + l]
    ):
        l += 1
    return l


# BFS state: (summary position, source of last fragment, start of last
# fragment, whether every fragment so far came from that one source).
_State = tuple[int, int, int, bool]


def _fusion_partition(
    summary: list[str], sources: list[list[str]], k_max: int
) -> Optional[list[Fragment]]:
    """Minimal partition of ``summary`` into fragments copied from ``sources``.

    Each fragment must be a contiguous token span of some source sentence;
    consecutive fragments drawn from the same source must not move backwards
    in it; the whole partition must use at least two distinct sources and at
    most ``k_max`` fragments. Returns the fragment list of a minimal-size
    partition, or None.
    """
    total = len(summary)
    if total == 0 or k_max < 2:
        return None

    # token -> [(source index, position)] for fragment starts
    starts: dict[str, list[tuple[int, int]]] = {}
    for si, src in enumerate(sources):
        for p, tok in enumerate(src):
            starts.setdefault(tok, []).append((si, p))

    def fragments_from(pos: int) -> list[tuple[int, int, int]]:
        out = []
        for si, p in starts.get(summary[pos], ()):
            m = _match_length(summary, pos, sources[si], p)
            for l in range(1, m + 1):
                out.append((si, p, l))
        return out

    queue: deque[tuple[_State, int]] = deque()
    parents: dict[_State, tuple[Optional[_State], Fragment]] = {}

    for si, p, l in fragments_from(0):
        state: _State = (l, si, p, True)
        if state not in parents:
            parents[state] = (None, (si, (p, p + l)))
            queue.append((state, 1))

    while queue:
        state, count = queue.popleft()
        pos, last_si, last_p, all_same = state
        if pos == total:
            if count >= 2 and not all_same:
                frags: list[Fragment] = []
                cur: Optional[_State] = state
                while cur is not None:
                    prev, frag = parents[cur]
                    frags.append(frag)
                    cur = prev
                frags.reverse()
                return frags
            continue
        if count >= k_max:
            continue
        for si, p, l in fragments_from(pos):
            if si == last_si and p < last_p:
                continue
            nxt: _State = (pos + l, si, p, all_same and si == last_si)
            if nxt not in parents:
                parents[nxt] = (state, (si, (p, p + l)))
                queue.append((nxt, count + 1))
    return None


def detect_perfect_fusion(
    summary: list[str], sources: list[list[str]], k_max: int = 4
) -> Optional[int]:
    """Smallest k in [2, k_max] fusing ``summary`` from >= 2 sources, or None."""
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    frags = _fusion_partition(summary, sources, k_max)
    return None if frags is None else len(frags)


def classify_sentence(
    summary_text: str, sources: list[Sentence], k_max: int = 4
) -> AbstractivenessLabel:
    """Label one summary sentence by the first matching copy type."""
    if not sources:
        raise ValueError("sources must be non-empty")
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    summary = tokenize(summary_text)
    if not summary:
        raise ValueError("summary sentence is empty")
    src_tokens = [tokenize(s.text) for s in sources]

    for si, src in enumerate(src_tokens):
        if src == summary:
            return AbstractivenessLabel(
                CopyKind.SENTENCE_EXTRACTION, evidence=((si, (0, len(src))),)
            )
    for si, src in enumerate(src_tokens):
        start = _find_sublist(summary, src)
        if start is not None:
            return AbstractivenessLabel(
                CopyKind.SPAN_EXTRACTION,
                evidence=((si, (start, start + len(summary))),),
            )
    for si, src in enumerate(src_tokens):
        span = _subsequence_span(summary, src)
        if span is not None:
            return AbstractivenessLabel(CopyKind.WORD_EXTRACTION, evidence=((si, span),))
    frags = _fusion_partition(summary, src_tokens, k_max)
    if frags is not None:
        return AbstractivenessLabel(
            CopyKind.PERFECT_FUSION, k=len(frags), evidence=tuple(frags)
        )
    return AbstractivenessLabel(CopyKind.OTHER)


def novel_ngram_rate(
    summary: list[str], document: list[str], n: int
) -> Optional[float]:
    """Fraction of summary n-gram positions whose n-gram is absent from the document."""
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    total = len(summary) - n + 1
    if total <= 0:
        return None
    doc_bag = ngrams(document, n)
    novel = sum(1 for i in range(total) if tuple(summary[i : i + n]) not in doc_bag)
    return novel / total


@dataclass
class _NovelTally:
    novel: int = 0
    total: int = 0


def corpus_profile(records, k_max: int = 4, novel_orders=(1, 2, 3)) -> AbstractivenessReport:
    """Aggregate copy-type labels and novel n-gram rates over a corpus.

    ``records`` is any iterable of objects with ``document`` (str) and
    ``summary_sentences`` (list of str) attributes.
    """
    records = list(records)
    if not records:
        raise ValueError("corpus is empty")

    counts: dict[CopyKind, int] = {kind: 0 for kind in CopyKind}
    fusion_k2 = 0
    fusion_any = 0
    tallies = {n: _NovelTally() for n in novel_orders}
    sentence_count = 0

    for record in records:
        sources = split_sentences(record.document)
        doc_tokens = tokenize(record.document)
        doc_bags = {n: ngrams(doc_tokens, n) for n in novel_orders}
        for sent_text in record.summary_sentences:
            label = classify_sentence(sent_text, sources, k_max)
            counts[label.kind] += 1
            sentence_count += 1
            if label.kind is CopyKind.PERFECT_FUSION:
                fusion_any += 1
                if label.k == 2:
                    fusion_k2 += 1
            summary = tokenize(sent_text)
            for n in novel_orders:
                total = len(summary) - n + 1
                if total <= 0:
                    continue
                bag = doc_bags[n]
                tallies[n].total += total
                tallies[n].novel += sum(
                    1 for i in range(total) if tuple(summary[i : i + n]) not in bag
                )

    return AbstractivenessReport(
        label_fractions={k: c / sentence_count for k, c in counts.items()},
        fusion_k2=fusion_k2 / sentence_count,
        fusion_k2_plus=fusion_any / sentence_count,
        novel_ngram_rates={
            n: (t.novel / t.total if t.total else None) for n, t in tallies.items()
        },
        sentence_count=sentence_count,
    )
