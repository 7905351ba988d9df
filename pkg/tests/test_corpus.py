from __future__ import annotations

import json

import pytest

from sumfaith.corpus import CorpusError, Record, dump_corpus, load_corpus


def _write(tmp_path, lines):
    path = tmp_path / "corpus.jsonl"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def test_load_minimal_record(tmp_path):
    path = _write(
        tmp_path,
        ['{"id":"a","document":"X. Y.","summary_sentences":["X."]}'],
    )
    records = load_corpus(path)
    assert len(records) == 1
    assert records[0].id == "a"
    assert records[0].document == "X. Y."
    assert records[0].summary_sentences == ["X."]
    assert records[0].reference is None
    assert records[0].human_score is None
    assert records[0].external_scores == {}


def test_load_full_record(tmp_path):
    obj = {
        "id": "b",
        "document": "Doc. Text.",
        "summary_sentences": ["One.", "Two."],
        "reference": "Ref.",
        "human_score": 0.75,
        "external_scores": {"bertscore": 0.83, "entailment": 0.72},
    }
    records = load_corpus(_write(tmp_path, [json.dumps(obj)]))
    assert records[0].reference == "Ref."
    assert records[0].human_score == 0.75
    assert records[0].external_scores == {"bertscore": 0.83, "entailment": 0.72}


def test_missing_document_names_field_and_line(tmp_path):
    path = _write(
        tmp_path,
        [
            '{"id":"a","document":"X.","summary_sentences":["X."]}',
            '{"id":"b","summary_sentences":["Y."]}',
        ],
    )
    with pytest.raises(CorpusError, match=r"line 2.*document"):
        load_corpus(path)


def test_invalid_json_names_line(tmp_path):
    path = _write(tmp_path, ['{"id":"a"', ""])
    with pytest.raises(CorpusError, match="line 1"):
        load_corpus(path)


def test_duplicate_id_rejected(tmp_path):
    line = '{"id":"a","document":"X.","summary_sentences":["X."]}'
    with pytest.raises(CorpusError, match="duplicate id"):
        load_corpus(_write(tmp_path, [line, line]))


def test_empty_document_rejected(tmp_path):
    path = _write(tmp_path, ['{"id":"a","document":"  ","summary_sentences":["X."]}'])
    with pytest.raises(CorpusError, match="empty"):
        load_corpus(path)


def test_empty_summary_sentence_rejected(tmp_path):
    path = _write(tmp_path, ['{"id":"a","document":"X.","summary_sentences":[""]}'])
    with pytest.raises(CorpusError):
        load_corpus(path)


def test_bad_human_score_rejected(tmp_path):
    path = _write(
        tmp_path,
        ['{"id":"a","document":"X.","summary_sentences":["X."],"human_score":"high"}'],
    )
    with pytest.raises(CorpusError, match="human_score"):
        load_corpus(path)


def test_blank_lines_skipped(tmp_path):
    path = _write(
        tmp_path,
        ['{"id":"a","document":"X.","summary_sentences":["X."]}', "", "   "],
    )
    assert len(load_corpus(path)) == 1


def test_round_trip_preserves_records(tmp_path):
    lines = [
        '{"id":"a","document":"X. Y.","summary_sentences":["X."]}',
        json.dumps(
            {
                "id": "b",
                "document": "Doc.",
                "summary_sentences": ["S one.", "S two."],
                "reference": "R.",
                "human_score": 0.5,
                "external_scores": {"m": 1.0},
            }
        ),
    ]
    src = _write(tmp_path, lines)
    records = load_corpus(src)
    out = tmp_path / "copy.jsonl"
    dump_corpus(records, out)
    again = load_corpus(out)
    assert again == records
    assert [r.id for r in again] == ["a", "b"]


def test_record_to_dict_omits_missing_optionals():
    record = Record(id="a", document="D.", summary_sentences=["S."])
    assert record.to_dict() == {
        "id": "a",
        "document": "D.",
        "summary_sentences": ["S."],
    }
