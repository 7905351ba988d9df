"""Command-line surface: ``profile``, ``score`` and ``correlate``.

Exit codes: 0 success, 1 usage/configuration error, 2 data error,
3 partial backend failure (some rows could not be scored remotely).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .abstractiveness import AbstractivenessReport, CopyKind, corpus_profile
from .corpus import CorpusError, Record, load_corpus
from .overlap import WORD_OVERLAP_METRICS, score_vs_source, sentence_metric
from .qa import (
    BackendError,
    LexicalBackend,
    RemoteBackend,
    ScoreStatus,
    feqa_score,
)
from .stats import ConstantVectorError, correlation_report, significance_stars
from .textops import split_sentences, tokenize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_PARTIAL = 3

ENDPOINT_ENV_VAR = "SUMFAITH_QA_ENDPOINT"

_REFERENCE_METRICS = ("rouge1", "rouge2", "rougeL")
_ALL_METRICS = WORD_OVERLAP_METRICS + ("feqa",)


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; route through the exit-code contract.
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="sumfaith", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: _Parser) -> None:
        p.add_argument("--input", required=True, help="JSONL corpus path")
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        p.add_argument("--output", default=None, help="write here instead of stdout")
        p.add_argument(
            "--split-summary",
            action="store_true",
            help="re-split each summary entry into sentences before scoring",
        )

    p_profile = sub.add_parser("profile", help="corpus abstractiveness report")
    add_common(p_profile)
    p_profile.add_argument("--k-max", type=int, default=4)
    p_profile.set_defaults(func=cmd_profile)

    def add_scoring(p: _Parser, default_metrics: str) -> None:
        p.add_argument("--metric", default=default_metrics, help="comma-separated names")
        p.add_argument("--agg", choices=("avg", "max"), default="avg")
        p.add_argument("--against", choices=("source", "reference"), default="source")
        p.add_argument("--backend", choices=("lexical", "remote"), default="lexical")
        p.add_argument("--endpoint", default=None, help=f"or set {ENDPOINT_ENV_VAR}")
        p.add_argument("--max-spans", type=int, default=10)
        p.add_argument("--concurrency", type=int, default=8)

    p_score = sub.add_parser("score", help="per-sentence metric table")
    add_common(p_score)
    add_scoring(p_score, ",".join(WORD_OVERLAP_METRICS))
    p_score.set_defaults(func=cmd_score)

    p_corr = sub.add_parser("correlate", help="metric vs human-score correlations")
    add_common(p_corr)
    add_scoring(p_corr, ",".join(WORD_OVERLAP_METRICS))
    p_corr.set_defaults(func=cmd_correlate)

    return parser


def _parse_metrics(arg: str) -> list[str]:
    metrics = [m.strip() for m in arg.split(",") if m.strip()]
    if not metrics:
        raise UsageError("--metric must name at least one metric")
    for m in metrics:
        if m not in _ALL_METRICS:
            raise UsageError(
                f"unknown metric {m!r}; choose from {', '.join(_ALL_METRICS)}"
            )
    return metrics


def _make_backend(args):
    if args.backend == "remote":
        endpoint = args.endpoint or os.environ.get(ENDPOINT_ENV_VAR)
        if not endpoint:
            raise UsageError(
                f"--backend remote requires --endpoint or {ENDPOINT_ENV_VAR}"
            )
        return RemoteBackend(endpoint)
    return LexicalBackend(args.max_spans)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _split_summaries(records: list[Record]) -> list[Record]:
    out = []
    for r in records:
        sentences = [
            s.text for entry in r.summary_sentences for s in split_sentences(entry)
        ]
        out.append(
            Record(
                id=r.id,
                document=r.document,
                summary_sentences=sentences or list(r.summary_sentences),
                reference=r.reference,
                human_score=r.human_score,
                external_scores=r.external_scores,
            )
        )
    return out


# -- profile ----------------------------------------------------------------


def _profile_json(report: AbstractivenessReport) -> dict:
    return {
        "label_fractions": {k.value: v for k, v in report.label_fractions.items()},
        "fusion_k2": report.fusion_k2,
        "fusion_k2_plus": report.fusion_k2_plus,
        "novel_ngram_rates": {str(n): v for n, v in report.novel_ngram_rates.items()},
        "sentence_count": report.sentence_count,
    }


_PROFILE_COLUMNS = (
    ("sentence_extraction", CopyKind.SENTENCE_EXTRACTION),
    ("span_extraction", CopyKind.SPAN_EXTRACTION),
    ("word_extraction", CopyKind.WORD_EXTRACTION),
)


def _profile_tsv(report: AbstractivenessReport) -> str:
    header = [name for name, _ in _PROFILE_COLUMNS]
    values = [f"{report.label_fractions[kind] * 100:.2f}" for _, kind in _PROFILE_COLUMNS]
    header += ["fusion_k2", "fusion_k2_plus", "other"]
    values += [
        f"{report.fusion_k2 * 100:.2f}",
        f"{report.fusion_k2_plus * 100:.2f}",
        f"{report.label_fractions[CopyKind.OTHER] * 100:.2f}",
    ]
    for n in sorted(report.novel_ngram_rates):
        header.append(f"novel_{n}")
        rate = report.novel_ngram_rates[n]
        values.append("" if rate is None else f"{rate * 100:.2f}")
    header.append("sentence_count")
    values.append(str(report.sentence_count))
    return "\t".join(header) + "\n" + "\t".join(values) + "\n"


def cmd_profile(records: list[Record], args) -> int:
    if args.k_max < 2:
        raise UsageError(f"--k-max must be >= 2, got {args.k_max}")
    report = corpus_profile(records, k_max=args.k_max)
    if args.format == "json":
        _emit(json.dumps(_profile_json(report), indent=2) + "\n", args.output)
    else:
        _emit(_profile_tsv(report), args.output)
    return EXIT_OK


# -- score ------------------------------------------------------------------


def _sentence_rows(record: Record, metrics, args, backend):
    """Yield (sentence_index, metric, aggregation, value, status) tuples."""
    sources = [tokenize(s.text) for s in split_sentences(record.document)]
    ref_tokens = tokenize(record.reference) if record.reference is not None else None
    for idx, sent_text in enumerate(record.summary_sentences):
        sent_tokens = tokenize(sent_text)
        for metric in metrics:
            if metric == "feqa":
                try:
                    result = feqa_score(
                        sent_text,
                        record.document,
                        backend,
                        max_spans=args.max_spans,
                        concurrency=args.concurrency,
                    )
                except BackendError:
                    yield idx, metric, "none", None, "backend_error"
                    continue
                if result.status is ScoreStatus.NO_QUESTIONS:
                    yield idx, metric, "none", None, "no_questions"
                else:
                    yield idx, metric, "none", result.value, "ok"
            elif args.against == "reference":
                if ref_tokens is None:
                    raise DataError(
                        f"record {record.id!r}: reference required for --against reference"
                    )
                value = sentence_metric(metric, sent_tokens, ref_tokens)
                yield idx, metric, "none", value, "ok"
            else:
                if not sources:
                    raise DataError(
                        f"record {record.id!r}: document has no sentences"
                    )
                score = score_vs_source(sent_tokens, sources, metric, args.agg)
                yield idx, metric, score.aggregation, score.value, "ok"


def cmd_score(records: list[Record], args) -> int:
    metrics = _parse_metrics(args.metric)
    if args.against == "reference":
        bad = [m for m in metrics if m not in _REFERENCE_METRICS]
        if bad:
            raise UsageError(
                f"--against reference supports {', '.join(_REFERENCE_METRICS)};"
                f" got {', '.join(bad)}"
            )
    backend = _make_backend(args) if "feqa" in metrics else None

    rows = []
    for record in records:
        for idx, metric, agg, value, status in _sentence_rows(record, metrics, args, backend):
            rows.append((record.id, idx, metric, agg, value, status))
    rows.sort(key=lambda r: (r[0], r[1], r[2]))

    partial = any(status == "backend_error" for *_, status in rows)
    if args.format == "json":
        body = [
            {
                "id": rid,
                "sentence": idx,
                "metric": metric,
                "aggregation": agg,
                "value": value,
                "status": status,
            }
            for rid, idx, metric, agg, value, status in rows
        ]
        _emit(json.dumps(body, indent=2) + "\n", args.output)
    else:
        lines = ["id\tsentence\tmetric\taggregation\tvalue\tstatus"]
        for rid, idx, metric, agg, value, status in rows:
            val = "" if value is None else f"{value:.6f}"
            lines.append(f"{rid}\t{idx}\t{metric}\t{agg}\t{val}\t{status}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_PARTIAL if partial else EXIT_OK


# -- correlate ---------------------------------------------------------------


def _record_metric_value(record: Record, metric: str, args, backend) -> Optional[float]:
    """One scalar per record: the mean over its summary sentences."""
    if metric.startswith("external:"):
        return record.external_scores.get(metric[len("external:") :])
    values = []
    for _, m, _, value, status in _sentence_rows(record, [metric], args, backend):
        if status == "ok" and value is not None:
            values.append(value)
    if not values:
        return None
    return sum(values) / len(values)


def cmd_correlate(records: list[Record], args) -> int:
    metrics = _parse_metrics(args.metric)
    if args.against == "reference":
        bad = [m for m in metrics if m not in _REFERENCE_METRICS]
        if bad:
            raise UsageError(
                f"--against reference supports {', '.join(_REFERENCE_METRICS)};"
                f" got {', '.join(bad)}"
            )
    external = sorted({name for r in records for name in r.external_scores})
    metrics = metrics + [f"external:{name}" for name in external]
    backend = _make_backend(args) if "feqa" in metrics else None

    scored = [r for r in records if r.human_score is not None]
    if len(scored) < 3:
        raise DataError(
            f"correlation needs human_score on >= 3 records, found {len(scored)}"
        )

    report_rows = []
    for metric in metrics:
        pairs = []
        for record in scored:
            value = _record_metric_value(record, metric, args, backend)
            if value is not None:
                pairs.append((value, record.human_score))
        dropped = len(scored) - len(pairs)
        if dropped:
            print(
                f"warning: {metric}: dropped {dropped} of {len(scored)} records"
                " lacking the metric",
                file=sys.stderr,
            )
        row = {"metric": metric, "n": len(pairs)}
        try:
            if len(pairs) < 3:
                raise DataError("fewer than 3 paired values")
            xs = [p[0] for p in pairs]
            ys = [p[1] for p in pairs]
            rep = correlation_report(xs, ys)
        except (ConstantVectorError, DataError) as exc:
            row.update(
                {
                    "pearson_r": None,
                    "p_pearson": None,
                    "spearman_rho": None,
                    "p_spearman": None,
                    "undefined": str(exc),
                }
            )
        else:
            row.update(
                {
                    "pearson_r": rep.pearson_r,
                    "p_pearson": rep.p_pearson,
                    "spearman_rho": rep.spearman_rho,
                    "p_spearman": rep.p_spearman,
                }
            )
        report_rows.append(row)

    if args.format == "json":
        _emit(json.dumps(report_rows, indent=2) + "\n", args.output)
    else:
        lines = ["metric\tn\tpearson\tp_pearson\tspearman\tp_spearman"]
        for row in report_rows:
            if row.get("pearson_r") is None:
                lines.append(f"{row['metric']}\t{row['n']}\tundefined\t\tundefined\t")
                continue
            pearson_disp = (
                f"{row['pearson_r'] * 100:.2f}{significance_stars(row['p_pearson'])}"
            )
            spearman_disp = (
                f"{row['spearman_rho'] * 100:.2f}{significance_stars(row['p_spearman'])}"
            )
            lines.append(
                f"{row['metric']}\t{row['n']}\t{pearson_disp}\t{row['p_pearson']:.6g}"
                f"\t{spearman_disp}\t{row['p_spearman']:.6g}"
            )
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        records = load_corpus(args.input)
        if args.split_summary:
            records = _split_summaries(records)
        if not records:
            raise DataError("corpus contains no records")
        return args.func(records, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CorpusError, DataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: cannot read corpus: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
