"""Faithfulness and abstractiveness evaluation for machine-generated summaries."""

from .abstractiveness import (
    AbstractivenessLabel,
    AbstractivenessReport,
    CopyKind,
    classify_sentence,
    corpus_profile,
    detect_perfect_fusion,
    novel_ngram_rate,
)
from .corpus import CorpusError, Record, dump_corpus, load_corpus
from .overlap import (
    PRF,
    MetricScore,
    bleu,
    rouge_l,
    rouge_n,
    score_vs_reference,
    score_vs_source,
)
from .qa import (
    AnswerSpan,
    AnswerType,
    FaithfulnessScore,
    LexicalBackend,
    QAPair,
    RemoteBackend,
    extract_answer_spans,
    feqa_score,
    generate_question,
    token_f1,
)
from .stats import (
    ConstantVectorError,
    CorrelationReport,
    correlation_report,
    pearson,
    rank,
    spearman,
    student_t_sf,
)
from .textops import Sentence, ngrams, normalize_answer, split_sentences, tokenize

__version__ = "0.1.0"
