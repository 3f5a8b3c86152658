"""Corpus analytics: role balance, argument positions, lengths, class weights.

Everything here is pure aggregation over CaseRecord values. Percentiles
use linear interpolation between closest ranks (numpy's default) so runs
agree bit-for-bit on fixtures; histograms use ten equal-width bins. Word
counts are whitespace words of the unmarked text, the same unit used for
truncation limits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .corpus import ArgRole, CaseRecord, EmptyCorpus, Sentence
from .markup import BadLimit

PERCENTILE_RANKS = (10, 25, 50, 75, 90)
HISTOGRAM_BINS = 10
DEFAULT_COVERAGE_LIMITS = (1024, 6144)

WEIGHT_SNAP_TARGET = 1000
WEIGHT_SNAP_WINDOW = (800, 1200)
WEIGHT_CLAMP = (1, 10000)


class NoArgumentative(ValueError):
    pass


@dataclass(frozen=True)
class DistributionSummary:
    """Five-number-plus summary of one sample of reals."""

    mean: float
    max: float
    min: float
    percentiles: Mapping[int, float]
    histogram: tuple[tuple[float, float, int], ...]
    count: int

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "max": self.max,
            "min": self.min,
            "percentiles": {str(rank): value for rank, value in self.percentiles.items()},
            "histogram": [list(bin_) for bin_ in self.histogram],
            "count": self.count,
        }


@dataclass(frozen=True)
class PositionRecord:
    """Where one argumentative document sentence starts, in whitespace words."""

    case_id: str
    role: ArgRole
    word_offset: int


def summarize_distribution(values: Sequence[float]) -> DistributionSummary:
    if not len(values):
        raise EmptyCorpus("cannot summarize an empty sample")
    array = np.asarray(values, dtype=float)
    ranks = np.percentile(array, PERCENTILE_RANKS)
    counts, edges = np.histogram(array, bins=HISTOGRAM_BINS)
    histogram = tuple(
        (float(edges[i]), float(edges[i + 1]), int(counts[i])) for i in range(len(counts))
    )
    lo, hi = float(array.min()), float(array.max())
    # Summation rounding can push the mean an ulp outside [min, max].
    mean = min(max(float(array.mean()), lo), hi)
    return DistributionSummary(
        mean=mean,
        max=hi,
        min=lo,
        percentiles={rank: float(value) for rank, value in zip(PERCENTILE_RANKS, ranks)},
        histogram=histogram,
        count=len(array),
    )


def _scope_sentences(record: CaseRecord, scope: str) -> tuple[Sentence, ...]:
    if scope == "doc":
        return record.doc
    if scope == "summary":
        return record.summary
    raise ValueError(f"unknown scope {scope!r}; expected 'doc' or 'summary'")


def _word_count(sentences: Iterable[Sentence]) -> int:
    return sum(len(sentence.text.split()) for sentence in sentences)


def _fraction_argumentative(sentences: Sequence[Sentence]) -> float:
    if not sentences:
        return 0.0
    return sum(1 for s in sentences if s.role.is_argumentative) / len(sentences)


def argumentative_fraction(
    corpus: Sequence[CaseRecord],
) -> tuple[DistributionSummary, DistributionSummary]:
    """Per-case argumentative-sentence fractions in docs and summaries."""
    if not corpus:
        raise EmptyCorpus("no cases to analyze")
    doc_fractions = [_fraction_argumentative(record.doc) for record in corpus]
    summary_fractions = [_fraction_argumentative(record.summary) for record in corpus]
    return summarize_distribution(doc_fractions), summarize_distribution(summary_fractions)


def role_counts(corpus: Iterable[CaseRecord], scope: str = "doc") -> dict[ArgRole, int]:
    counts = {role: 0 for role in ArgRole}
    for record in corpus:
        for sentence in _scope_sentences(record, scope):
            counts[sentence.role] += 1
    return counts


def position_records(corpus: Iterable[CaseRecord]) -> list[PositionRecord]:
    """One record per argumentative document sentence.

    The offset counts whitespace words strictly before the sentence in the
    unmarked joined document, so it is marker-free by construction.
    """
    records = []
    for record in corpus:
        offset = 0
        for sentence in record.doc:
            if sentence.role.is_argumentative:
                records.append(PositionRecord(record.id, sentence.role, offset))
            offset += len(sentence.text.split())
    return records


def coverage_under_limit(records: Sequence[PositionRecord], limit: int) -> float:
    """Fraction of argument positions an encoder with this word limit sees."""
    if limit < 1:
        raise BadLimit(f"limit must be >= 1, got {limit}")
    if not records:
        return 0.0
    return sum(1 for record in records if record.word_offset < limit) / len(records)


def length_distribution(corpus: Sequence[CaseRecord], scope: str = "doc") -> DistributionSummary:
    if not corpus:
        raise EmptyCorpus("no cases to analyze")
    return summarize_distribution(
        [_word_count(_scope_sentences(record, scope)) for record in corpus]
    )


def derive_class_weights(counts: Mapping[ArgRole, int]) -> dict[str, int]:
    """Inverse-frequency weight for the argumentative class, snapped near 1000.

    weight(non) = 1; weight(arg) = round(non/arg) clamped to [1, 10000],
    rounding half up so the result is platform-independent. Ratios within
    the inclusive +/-20% window around 1000 snap to exactly 1000.
    """
    arg_total = sum(count for role, count in counts.items() if role.is_argumentative)
    non_total = counts.get(ArgRole.NON_ARGUMENT, 0)
    if arg_total == 0:
        raise NoArgumentative("no argumentative sentences; class weights undefined")
    ratio = non_total / arg_total
    if WEIGHT_SNAP_WINDOW[0] <= ratio <= WEIGHT_SNAP_WINDOW[1]:
        weight = WEIGHT_SNAP_TARGET
    else:
        weight = min(max(math.floor(ratio + 0.5), WEIGHT_CLAMP[0]), WEIGHT_CLAMP[1])
    return {"argumentative": weight, "non_argumentative": 1}


def fractions_csv_rows(corpus: Sequence[CaseRecord]) -> list[str]:
    rows = ["case_id,doc_fraction,summary_fraction"]
    for record in corpus:
        rows.append(
            f"{record.id},{_fraction_argumentative(record.doc):.6f},"
            f"{_fraction_argumentative(record.summary):.6f}"
        )
    return rows


def role_counts_csv_rows(corpus: Sequence[CaseRecord]) -> list[str]:
    rows = ["scope,role,count"]
    for scope in ("doc", "summary"):
        counts = role_counts(corpus, scope)
        for role in ArgRole:
            rows.append(f"{scope},{role.value},{counts[role]}")
    return rows


def positions_csv_rows(records: Sequence[PositionRecord]) -> list[str]:
    rows = ["case_id,role,word_offset"]
    for record in records:
        rows.append(f"{record.case_id},{record.role.value},{record.word_offset}")
    return rows


def lengths_csv_rows(corpus: Sequence[CaseRecord]) -> list[str]:
    rows = ["case_id,doc_words,summary_words"]
    for record in corpus:
        rows.append(f"{record.id},{_word_count(record.doc)},{_word_count(record.summary)}")
    return rows


def coverage_csv_rows(
    records: Sequence[PositionRecord],
    limits: Sequence[int] = DEFAULT_COVERAGE_LIMITS,
) -> list[str]:
    rows = ["limit,fraction"]
    for limit in limits:
        rows.append(f"{limit},{coverage_under_limit(records, limit):.6f}")
    return rows


def stats_report(corpus: Sequence[CaseRecord]) -> dict:
    """JSON-ready bundle of every analytic; class_weights is null when undefined."""
    if not corpus:
        raise EmptyCorpus("no cases to analyze")
    doc_fractions, summary_fractions = argumentative_fraction(corpus)
    records = position_records(corpus)
    doc_counts = role_counts(corpus, "doc")
    try:
        class_weights = derive_class_weights(doc_counts)
    except NoArgumentative:
        class_weights = None
    return {
        "case_count": len(corpus),
        "argumentative_fraction": {
            "doc": doc_fractions.to_dict(),
            "summary": summary_fractions.to_dict(),
        },
        "role_counts": {
            scope: {role.value: count for role, count in role_counts(corpus, scope).items()}
            for scope in ("doc", "summary")
        },
        "length_distribution": {
            scope: length_distribution(corpus, scope).to_dict() for scope in ("doc", "summary")
        },
        "coverage": {
            str(limit): coverage_under_limit(records, limit) for limit in DEFAULT_COVERAGE_LIMITS
        },
        "argument_position_count": len(records),
        "class_weights": class_weights,
    }
