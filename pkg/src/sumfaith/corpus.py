"""JSONL corpus ingestion and record validation.

One JSON object per line:

    {"id": "...", "document": "...", "summary_sentences": ["...", ...],
     "reference": "...", "human_score": 0.8, "external_scores": {"name": 0.5}}

``reference``, ``human_score`` and ``external_scores`` are optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


class CorpusError(Exception):
    """Invalid corpus file; the message carries the offending line number."""


@dataclass
class Record:
    id: str
    document: str
    summary_sentences: list[str]
    reference: Optional[str] = None
    human_score: Optional[float] = None
    external_scores: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict = {
            "id": self.id,
            "document": self.document,
            "summary_sentences": list(self.summary_sentences),
        }
        if self.reference is not None:
            out["reference"] = self.reference
        if self.human_score is not None:
            out["human_score"] = self.human_score
        if self.external_scores:
            out["external_scores"] = dict(self.external_scores)
        return out


def _fail(line_no: int, message: str) -> CorpusError:
    return CorpusError(f"line {line_no}: {message}")


def _record_from_obj(obj: dict, line_no: int) -> Record:
    if not isinstance(obj, dict):
        raise _fail(line_no, "record must be a JSON object")

    rid = obj.get("id")
    if not isinstance(rid, str) or not rid:
        raise _fail(line_no, "missing or invalid field 'id'")
    document = obj.get("document")
    if not isinstance(document, str):
        raise _fail(line_no, "missing or invalid field 'document'")
    if not document.strip():
        raise _fail(line_no, "field 'document' is empty")
    sentences = obj.get("summary_sentences")
    if not isinstance(sentences, list) or not sentences:
        raise _fail(line_no, "missing or invalid field 'summary_sentences'")
    for s in sentences:
        if not isinstance(s, str) or not s.strip():
            raise _fail(line_no, "'summary_sentences' entries must be non-empty strings")

    reference = obj.get("reference")
    if reference is not None and not isinstance(reference, str):
        raise _fail(line_no, "'reference' must be a string")
    human_score = obj.get("human_score")
    if human_score is not None:
        if isinstance(human_score, bool) or not isinstance(human_score, (int, float)):
            raise _fail(line_no, "'human_score' must be a number")
        human_score = float(human_score)
    externals = obj.get("external_scores") or {}
    if not isinstance(externals, dict):
        raise _fail(line_no, "'external_scores' must be an object")
    for name, value in externals.items():
        if not isinstance(name, str) or not name:
            raise _fail(line_no, "'external_scores' keys must be strings")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise _fail(line_no, f"'external_scores[{name}]' must be a number")

    return Record(
        id=rid,
        document=document,
        summary_sentences=list(sentences),
        reference=reference,
        human_score=human_score,
        external_scores={k: float(v) for k, v in externals.items()},
    )


def load_corpus(path) -> list[Record]:
    """Read and validate a JSONL corpus, preserving file order."""
    records: list[Record] = []
    seen_ids: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise _fail(line_no, f"invalid JSON: {exc.msg}") from exc
            record = _record_from_obj(obj, line_no)
            if record.id in seen_ids:
                raise _fail(
                    line_no,
                    f"duplicate id {record.id!r} (first seen on line {seen_ids[record.id]})",
                )
            seen_ids[record.id] = line_no
            records.append(record)
    return records


def dump_corpus(records: list[Record], path) -> None:
    """Write records back out as JSONL."""
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record.to_dict(), ensure_ascii=False) + "\n")
