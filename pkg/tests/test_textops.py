from __future__ import annotations

import random
import re

import pytest

from sumfaith.textops import (
    Sentence,
    detokenize,
    ngrams,
    normalize_answer,
    split_sentences,
    surface_tokens,
    tokenize,
)


def test_split_on_each_terminator():
    assert [s.text for s in split_sentences("A. B? C!")] == ["A.", "B?", "C!"]


def test_split_empty_input():
    assert split_sentences("") == []


def test_split_keeps_known_abbreviations_attached():
    got = [s.text for s in split_sentences("Mr. Smith left. He returned.")]
    assert got == ["Mr. Smith left.", "He returned."]


def test_split_handles_more_abbreviations():
    text = "Dr. Jones met Mrs. Lee in the U.S. capital. They talked."
    got = [s.text for s in split_sentences(text)]
    assert got == ["Dr. Jones met Mrs. Lee in the U.S. capital.", "They talked."]


def test_split_requires_uppercase_continuation():
    assert [s.text for s in split_sentences("version 2. beta is out")] == [
        "version 2. beta is out"
    ]


def test_split_indices_are_ordinal():
    sents = split_sentences("One. Two. Three.")
    assert [s.index for s in sents] == [0, 1, 2]


def test_split_concatenation_preserves_text():
    texts = [
        "A. B? C!",
        "Mr. Smith left.   He returned.",
        "No terminator here",
        "  Leading space. Trailing!  ",
    ]
    for text in texts:
        joined = " ".join(s.text for s in split_sentences(text))
        assert re.sub(r"\s+", " ", joined).strip() == re.sub(r"\s+", " ", text).strip()


def test_split_sentences_are_disjoint_spans():
    text = "Alpha beta. Gamma delta? Epsilon!"
    sents = split_sentences(text)
    cursor = 0
    for s in sents:
        pos = text.index(s.text, cursor)
        cursor = pos + len(s.text)


def test_tokenize_lowercases_and_separates_punctuation():
    assert tokenize("The plane landed.") == ["the", "plane", "landed", "."]


def test_tokenize_keeps_digit_groups():
    assert tokenize("almost 60,000 followers") == ["almost", "60,000", "followers"]
    assert tokenize("a 3.5 rating") == ["a", "3.5", "rating"]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_rejoin_idempotent():
    rng = random.Random(7)
    words = ["The", "cat", "60,000", "ran!", "Mr.", "was", "3.5", "it's", "(x)"]
    for _ in range(50):
        text = " ".join(rng.choices(words, k=rng.randint(0, 12)))
        once = tokenize(text)
        assert tokenize(" ".join(once)) == once


def test_surface_tokens_preserve_case():
    assert surface_tokens("Dean Marney returned.") == ["Dean", "Marney", "returned", "."]


def test_detokenize_reattaches_punctuation():
    assert detokenize(["Miss", "Bruck", ",", "22", ","]) == "Miss Bruck, 22,"
    assert detokenize(["(", "knee", ")"]) == "(knee)"


def test_normalize_answer_strips_articles_and_punct():
    assert normalize_answer("The President!") == ["president"]
    assert normalize_answer("six months") == ["six", "months"]
    assert normalize_answer("A  dog") == ["dog"]


def test_normalize_answer_idempotent():
    rng = random.Random(11)
    pool = ["The", "a", "an", "dog's", "60,000", "U.S.", "president", "!!", "it"]
    for _ in range(50):
        text = " ".join(rng.choices(pool, k=rng.randint(0, 8)))
        once = normalize_answer(text)
        assert normalize_answer(" ".join(once)) == once


def test_ngrams_counts():
    assert dict(ngrams(["a", "b", "a", "b"], 2)) == {("a", "b"): 2, ("b", "a"): 1}
    assert dict(ngrams(["x", "y", "z"], 1)) == {("x",): 1, ("y",): 1, ("z",): 1}


def test_ngrams_too_short_is_empty():
    assert not ngrams(["a"], 2)


def test_ngrams_rejects_bad_order():
    with pytest.raises(ValueError):
        ngrams(["a"], 0)


def test_ngram_total_count_property():
    rng = random.Random(3)
    for _ in range(100):
        toks = [rng.choice("abcde") for _ in range(rng.randint(0, 20))]
        n = rng.randint(1, 5)
        assert sum(ngrams(toks, n).values()) == max(0, len(toks) - n + 1)


def test_sentence_dataclass_fields():
    s = Sentence("Hello there.", 3)
    assert s.text == "Hello there."
    assert s.index == 3
