"""Argument-aware legal summarization toolkit.

Corpus handling, argument-role marker injection, truncation emulation,
from-scratch ROUGE scoring, argumentativeness evaluation and corpus
analytics, tied together by the ``argsum`` command line.
"""
from .argeval import (
    IrcReference,
    MissingHypothesis,
    evaluate_argumentativeness,
    irc_reference,
    irc_subset,
    load_hypotheses,
    save_hypotheses,
)
from .corpus import (
    ArgRole,
    BadRatios,
    CaseRecord,
    CorpusError,
    DuplicateId,
    EmptyCorpus,
    EmptyDocument,
    EmptyField,
    MalformedRecord,
    MarkerCollision,
    RESERVED_MARKER_TOKENS,
    Sentence,
    SplitAssignment,
    UnknownRole,
    ValidationReport,
    load_corpus,
    load_split,
    parse_case_record,
    parse_role,
    save_corpus,
    save_split,
    seeded_shuffle,
    serialize_case_record,
    split_corpus,
    validate_corpus,
)
from .markup import (
    BadLimit,
    MarkedDocument,
    MarkerScheme,
    RoleSpan,
    downgrade_scheme,
    inject_markers,
    marker_vocabulary,
    strip_all_markers,
    strip_markers,
    truncate_words,
)
from .metrics import (
    BadN,
    CaseScore,
    ClassificationReport,
    EmptyInput,
    EmptyPairList,
    EvalReport,
    LengthMismatch,
    RougeScore,
    TokenizerConfig,
    classification_report,
    evaluate_corpus,
    lcs_length,
    ngram_counts,
    rouge_l,
    rouge_n,
    score_pair,
    tokenize,
)
from .porter import porter_stem
from .stats import (
    DistributionSummary,
    NoArgumentative,
    PositionRecord,
    argumentative_fraction,
    coverage_under_limit,
    derive_class_weights,
    length_distribution,
    position_records,
    role_counts,
    stats_report,
    summarize_distribution,
)

__version__ = "0.1.0"
