"""Neural models that speak the argument-summarization file formats.

Two trainable pieces: a sentence-level argument-role classifier and a
marked-input sequence-to-sequence summarizer. Both read and write the
pipeline's JSONL formats and nothing else, so they slot in wherever the
oracle-role path would otherwise run.
"""

from .classifier import (
    DEV_REPORT_FILE,
    LABELS,
    LabelSetMismatch,
    classification_report_dict,
    predict_roles,
    train_classifier,
)
from .config import (
    INPUT_LIMIT_CHOICES,
    SELECTION_METRICS,
    ConfigError,
    TrainingConfig,
    class_weights_from_stats,
    default_class_weights,
    load_config,
    save_config,
)
from .data import (
    ARGUMENTATIVE_ROLES,
    ROLE_NAMES,
    SCHEME_NAMES,
    Case,
    FormatError,
    MarkedRecord,
    count_words,
    read_corpus,
    read_marked,
    truncate_words,
    write_hypotheses,
    write_predictions,
)
from .loop import EarlyStopper
from .summarizer import (
    DEV_METRICS_FILE,
    generate_summaries,
    rouge2_f1,
    train_summarizer,
)
from .tokenization import (
    BASE_SPECIAL_TOKENS,
    MARKER_TOKENS,
    VocabularyError,
    build_word_tokenizer,
    ensure_atomic_markers,
)

TRAINING_CONFIG_FILE = "training_config.json"

__version__ = "0.1.0"

__all__ = [
    "ARGUMENTATIVE_ROLES",
    "BASE_SPECIAL_TOKENS",
    "Case",
    "ConfigError",
    "DEV_METRICS_FILE",
    "DEV_REPORT_FILE",
    "EarlyStopper",
    "FormatError",
    "INPUT_LIMIT_CHOICES",
    "LABELS",
    "LabelSetMismatch",
    "MARKER_TOKENS",
    "MarkedRecord",
    "ROLE_NAMES",
    "SCHEME_NAMES",
    "SELECTION_METRICS",
    "TRAINING_CONFIG_FILE",
    "TrainingConfig",
    "VocabularyError",
    "build_word_tokenizer",
    "class_weights_from_stats",
    "classification_report_dict",
    "count_words",
    "default_class_weights",
    "ensure_atomic_markers",
    "generate_summaries",
    "load_config",
    "predict_roles",
    "read_corpus",
    "read_marked",
    "rouge2_f1",
    "save_config",
    "train_classifier",
    "train_summarizer",
    "truncate_words",
    "write_hypotheses",
    "write_predictions",
]
