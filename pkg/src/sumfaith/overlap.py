"""Word-overlap metrics between token sequences: ROUGE-1/2/L and BLEU.

ROUGE scalars are F-measures. Sentence-level BLEU uses add-epsilon
smoothing on zero match counts so short candidates don't collapse the
geometric mean to exactly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import mean

from .textops import ngrams

WORD_OVERLAP_METRICS = ("rouge1", "rouge2", "rougeL", "bleu4")
AGGREGATIONS = ("avg", "max", "none")

_BLEU_EPSILON = 1e-9


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class MetricScore:
    metric: str
    value: float
    aggregation: str = "none"


def _prf(precision: float, recall: float) -> PRF:
    if precision + recall == 0:
        return PRF(precision, recall, 0.0)
    return PRF(precision, recall, 2 * precision * recall / (precision + recall))


def rouge_n(candidate: list[str], reference: list[str], n: int) -> PRF:
    """Clipped n-gram overlap precision/recall/F between two token sequences."""
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    cand_bag = ngrams(candidate, n)
    ref_bag = ngrams(reference, n)
    overlap = sum((cand_bag & ref_bag).values())
    cand_total = sum(cand_bag.values())
    ref_total = sum(ref_bag.values())
    precision = overlap / cand_total if cand_total else 0.0
    recall = overlap / ref_total if ref_total else 0.0
    return _prf(precision, recall)


def lcs_length(a: list[str], b: list[str]) -> int:
    """Length of the longest common subsequence (two-row DP)."""
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            if x == y:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_l(candidate: list[str], reference: list[str]) -> PRF:
    """LCS-based precision/recall/F between two token sequences."""
    if not candidate or not reference:
        return PRF(0.0, 0.0, 0.0)
    lcs = lcs_length(candidate, reference)
    return _prf(lcs / len(candidate), lcs / len(reference))


def bleu(candidate: list[str], reference: list[str], max_order: int = 4) -> float:
    """Smoothed sentence-level BLEU with brevity penalty."""
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    if not candidate:
        return 0.0
    log_sum = 0.0
    for n in range(1, max_order + 1):
        cand_bag = ngrams(candidate, n)
        ref_bag = ngrams(reference, n)
        total = sum(cand_bag.values())
        matches = sum((cand_bag & ref_bag).values())
        if total == 0:
            p = _BLEU_EPSILON
        else:
            p = (matches if matches > 0 else _BLEU_EPSILON) / total
        log_sum += math.log(p)
    if len(candidate) < len(reference):
        brevity = math.exp(1 - len(reference) / len(candidate))
    else:
        brevity = 1.0
    return brevity * math.exp(log_sum / max_order)


def sentence_metric(name: str, candidate: list[str], reference: list[str]) -> float:
    """Scalar value of one named overlap metric for a candidate/reference pair."""
    if name == "rouge1":
        return rouge_n(candidate, reference, 1).f1
    if name == "rouge2":
        return rouge_n(candidate, reference, 2).f1
    if name == "rougeL":
        return rouge_l(candidate, reference).f1
    if name == "bleu4":
        return bleu(candidate, reference, 4)
    raise ValueError(f"unknown overlap metric: {name!r}")


def score_vs_source(
    summary: list[str],
    source_sentences: list[list[str]],
    metric: str,
    aggregation: str = "avg",
) -> MetricScore:
    """Score a summary sentence against each source sentence and aggregate.

    Each source sentence plays the reference role; per-sentence values are
    combined with the arithmetic mean ("avg") or the maximum ("max").
    """
    if not source_sentences:
        raise ValueError("source_sentences must be non-empty")
    if aggregation not in ("avg", "max"):
        raise ValueError(f"aggregation must be 'avg' or 'max', got {aggregation!r}")
    values = [sentence_metric(metric, summary, src) for src in source_sentences]
    value = mean(values) if aggregation == "avg" else max(values)
    return MetricScore(metric=metric, value=value, aggregation=aggregation)


def score_vs_reference(summary: list[str], reference: list[str]) -> list[MetricScore]:
    """ROUGE-1/2/L F-scores of a summary sentence against the reference."""
    if reference is None:
        raise ValueError("reference is missing")
    return [
        MetricScore("rouge1", rouge_n(summary, reference, 1).f1),
        MetricScore("rouge2", rouge_n(summary, reference, 2).f1),
        MetricScore("rougeL", rouge_l(summary, reference).f1),
    ]
