"""ROUGE-1/2/L scoring with a pinned tokenizer, plus role-classification metrics.

All ROUGE internals work on a 0-1 scale with an F-measure beta of 1;
reports present aggregates on a 0-100 scale rounded to two decimals.
The tokenizer splits on maximal runs of non-alphanumeric characters,
lowercases by default and never stems unless asked to.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .corpus import ArgRole, DuplicateId
from .porter import porter_stem

TOKEN_PATTERN_NAME = "alphanumeric runs"
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


class BadN(ValueError):
    pass


class EmptyPairList(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class TokenizerConfig:
    """Scoring tokenizer settings; recorded verbatim in every report."""

    lowercase: bool = True
    stemming: bool = False
    token_pattern: str = TOKEN_PATTERN_NAME

    def __post_init__(self):
        if self.token_pattern != TOKEN_PATTERN_NAME:
            raise ValueError(f"only the {TOKEN_PATTERN_NAME!r} token pattern is supported")


DEFAULT_TOKENIZER = TokenizerConfig()


def tokenize(text: str, config: TokenizerConfig = DEFAULT_TOKENIZER) -> list[str]:
    """Split into maximal alphanumeric runs, then lowercase/stem per config."""
    tokens = _TOKEN_RE.findall(text)
    if config.lowercase:
        tokens = [token.lower() for token in tokens]
    if config.stemming:
        tokens = [porter_stem(token) for token in tokens]
    return tokens


def ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    """Multiset of contiguous n-grams; fewer than n tokens yields empty."""
    if n < 1:
        raise BadN(f"n must be >= 1, got {n}")
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float

    @classmethod
    def from_counts(cls, overlap: float, ref_total: int, hyp_total: int) -> "RougeScore":
        precision = overlap / hyp_total if hyp_total else 0.0
        recall = overlap / ref_total if ref_total else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        return cls(precision=precision, recall=recall, f1=f1)

    def to_dict(self) -> dict:
        return {"precision": self.precision, "recall": self.recall, "f1": self.f1}


def _rouge_n_counts(ref_tokens: Sequence[str], hyp_tokens: Sequence[str], n: int) -> tuple[int, int, int]:
    ref_grams = ngram_counts(ref_tokens, n)
    hyp_grams = ngram_counts(hyp_tokens, n)
    overlap = sum(min(count, ref_grams[gram]) for gram, count in hyp_grams.items())
    return overlap, sum(ref_grams.values()), sum(hyp_grams.values())


def rouge_n(
    reference: str,
    hypothesis: str,
    n: int,
    config: TokenizerConfig = DEFAULT_TOKENIZER,
) -> RougeScore:
    """Clipped n-gram overlap: recall over reference, precision over hypothesis."""
    overlap, ref_total, hyp_total = _rouge_n_counts(tokenize(reference, config), tokenize(hypothesis, config), n)
    return RougeScore.from_counts(overlap, ref_total, hyp_total)


def lcs_length(a: Sequence, b: Sequence) -> int:
    """Longest common subsequence length; O(|a|*|b|) time, O(min) memory."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return 0
    previous = [0] * (len(b) + 1)
    for x in a:
        current = [0]
        for j, y in enumerate(b, 1):
            if x == y:
                current.append(previous[j - 1] + 1)
            else:
                current.append(max(previous[j], current[-1]))
        previous = current
    return previous[-1]


def _lcs_hit_mask(ref_tokens: Sequence[str], hyp_tokens: Sequence[str]) -> list[bool]:
    """Mark which reference positions take part in one LCS with the hypothesis."""
    m, n = len(ref_tokens), len(hyp_tokens)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if ref_tokens[i - 1] == hyp_tokens[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    mask = [False] * m
    i, j = m, n
    while i > 0 and j > 0:
        if ref_tokens[i - 1] == hyp_tokens[j - 1] and table[i][j] == table[i - 1][j - 1] + 1:
            mask[i - 1] = True
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            i -= 1
        else:
            j -= 1
    return mask


def _rouge_l_union_counts(
    ref_sentences: Sequence[Sequence[str]], hyp_tokens: Sequence[str]
) -> tuple[int, int, int]:
    """Union-LCS hits clipped by remaining unigram counts on both sides."""
    ref_total = sum(len(sentence) for sentence in ref_sentences)
    hyp_remaining = Counter(hyp_tokens)
    ref_remaining = Counter(token for sentence in ref_sentences for token in sentence)
    hits = 0
    for sentence in ref_sentences:
        mask = _lcs_hit_mask(sentence, hyp_tokens)
        for token, hit in zip(sentence, mask):
            if hit and hyp_remaining[token] > 0 and ref_remaining[token] > 0:
                hyp_remaining[token] -= 1
                ref_remaining[token] -= 1
                hits += 1
    return hits, ref_total, len(hyp_tokens)


def rouge_l(
    reference: str,
    hypothesis: str,
    config: TokenizerConfig = DEFAULT_TOKENIZER,
    mode: str = "sequence",
) -> RougeScore:
    """LCS-based score.

    The default "sequence" mode treats each text as one token sequence.
    The optional "union" mode treats newline-separated lines of the
    reference as sentences and scores the clipped union of per-sentence
    LCS hits; reports label whichever mode produced them.
    """
    hyp_tokens = tokenize(hypothesis, config)
    if mode == "sequence":
        ref_tokens = tokenize(reference, config)
        overlap = lcs_length(ref_tokens, hyp_tokens)
        return RougeScore.from_counts(overlap, len(ref_tokens), len(hyp_tokens))
    if mode == "union":
        ref_sentences = [tokenize(line, config) for line in reference.split("\n") if line.strip()]
        overlap, ref_total, hyp_total = _rouge_l_union_counts(ref_sentences, hyp_tokens)
        return RougeScore.from_counts(overlap, ref_total, hyp_total)
    raise ValueError(f"unknown rouge_l mode {mode!r}")


def _pair_counts(
    reference: str,
    hypothesis: str,
    config: TokenizerConfig,
    rouge_l_mode: str,
) -> dict[str, tuple[int, int, int]]:
    """(overlap, ref_total, hyp_total) per metric; feeds both aggregations."""
    ref_tokens = tokenize(reference, config)
    hyp_tokens = tokenize(hypothesis, config)
    counts = {
        "rouge1": _rouge_n_counts(ref_tokens, hyp_tokens, 1),
        "rouge2": _rouge_n_counts(ref_tokens, hyp_tokens, 2),
    }
    if rouge_l_mode == "sequence":
        counts["rougeL"] = (lcs_length(ref_tokens, hyp_tokens), len(ref_tokens), len(hyp_tokens))
    elif rouge_l_mode == "union":
        ref_sentences = [tokenize(line, config) for line in reference.split("\n") if line.strip()]
        counts["rougeL"] = _rouge_l_union_counts(ref_sentences, hyp_tokens)
    else:
        raise ValueError(f"unknown rouge_l mode {rouge_l_mode!r}")
    return counts


def score_pair(
    reference: str,
    hypothesis: str,
    config: TokenizerConfig = DEFAULT_TOKENIZER,
    rouge_l_mode: str = "sequence",
) -> tuple[RougeScore, RougeScore, RougeScore]:
    """ROUGE-1, ROUGE-2 and ROUGE-L for one (reference, hypothesis) pair."""
    counts = _pair_counts(reference, hypothesis, config, rouge_l_mode)
    return tuple(RougeScore.from_counts(*counts[metric]) for metric in ("rouge1", "rouge2", "rougeL"))


@dataclass(frozen=True)
class CaseScore:
    id: str
    rouge1: RougeScore
    rouge2: RougeScore
    rougeL: RougeScore
    hyp_words: int

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "rouge1": self.rouge1.to_dict(),
            "rouge2": self.rouge2.to_dict(),
            "rougeL": self.rougeL.to_dict(),
            "hyp_words": self.hyp_words,
        }


@dataclass
class EvalReport:
    """Per-case scores plus aggregates; serializable for the CLI reports.

    Per-case scores stay on the internal 0-1 scale; aggregates are on a
    0-100 scale rounded to two decimals. ``excluded_ids`` lists reference
    summaries that could not be scored (empty argumentative subset).
    """

    config: dict
    cases: list[CaseScore]
    aggregates: dict[str, dict[str, float]]
    mean_hypothesis_words: float
    scored_case_count: int
    excluded_case_count: int = 0
    excluded_ids: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "aggregates": self.aggregates,
            "mean_hypothesis_words": self.mean_hypothesis_words,
            "scored_case_count": self.scored_case_count,
            "excluded_case_count": self.excluded_case_count,
            "excluded_ids": list(self.excluded_ids),
            "cases": [case.to_dict() for case in self.cases],
        }

    def to_csv_rows(self) -> list[str]:
        rows = ["id,rouge1_f,rouge2_f,rougeL_f,hyp_words"]
        for case in self.cases:
            rows.append(
                f"{case.id},{case.rouge1.f1:.6f},{case.rouge2.f1:.6f},"
                f"{case.rougeL.f1:.6f},{case.hyp_words}"
            )
        return rows


def scoring_config_echo(
    config: TokenizerConfig,
    rouge_l_mode: str = "sequence",
    aggregation: str = "mean_of_cases",
    reference: str = "full_summary",
) -> dict:
    return {
        "tokenizer": {
            "lowercase": config.lowercase,
            "stemming": config.stemming,
            "token_pattern": config.token_pattern,
        },
        "f_beta": 1.0,
        "aggregation": aggregation,
        "rouge_l_mode": rouge_l_mode,
        "reference": reference,
        "aggregate_scale": "0-100",
        "case_scale": "0-1",
    }


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values) if values else 0.0


def aggregate_case_scores(cases: Sequence[CaseScore]) -> dict:
    """Mean of per-case precision/recall/F1 on a 0-100 scale, rounded to 2dp.

    Compensated summation keeps the result independent of case order.
    """
    aggregates = {}
    for metric in ("rouge1", "rouge2", "rougeL"):
        scores = [getattr(case, metric) for case in cases]
        aggregates[metric] = {
            "precision": round(100.0 * _mean([s.precision for s in scores]), 2),
            "recall": round(100.0 * _mean([s.recall for s in scores]), 2),
            "f1": round(100.0 * _mean([s.f1 for s in scores]), 2),
        }
    return aggregates


def _aggregate_pooled(case_counts: Sequence[Mapping[str, tuple[int, int, int]]]) -> dict:
    """Micro aggregation: pool raw counts across cases, then score once."""
    aggregates = {}
    for metric in ("rouge1", "rouge2", "rougeL"):
        overlap = sum(counts[metric][0] for counts in case_counts)
        ref_total = sum(counts[metric][1] for counts in case_counts)
        hyp_total = sum(counts[metric][2] for counts in case_counts)
        score = RougeScore.from_counts(overlap, ref_total, hyp_total)
        aggregates[metric] = {
            "precision": round(100.0 * score.precision, 2),
            "recall": round(100.0 * score.recall, 2),
            "f1": round(100.0 * score.f1, 2),
        }
    return aggregates


def evaluate_corpus(
    pairs: Iterable[tuple[str, str, str]],
    config: TokenizerConfig = DEFAULT_TOKENIZER,
    rouge_l_mode: str = "sequence",
    aggregation: str = "mean_of_cases",
) -> EvalReport:
    """Score (reference, hypothesis, id) pairs and aggregate.

    Aggregation "mean_of_cases" (default) averages per-case scores;
    "pooled" computes precision/recall once from summed counts. Hypothesis
    word counts use whitespace words, matching the truncation unit. Texts
    are scored as given; pipeline callers strip marker tokens first.
    """
    if aggregation not in ("mean_of_cases", "pooled"):
        raise ValueError(f"unknown aggregation {aggregation!r}")
    pairs = list(pairs)
    if not pairs:
        raise EmptyPairList("no (reference, hypothesis, id) pairs to score")
    ids = [pair_id for _, _, pair_id in pairs]
    if len(set(ids)) != len(ids):
        raise DuplicateId("pair ids are not unique")
    cases = []
    case_counts = []
    for reference, hypothesis, pair_id in pairs:
        counts = _pair_counts(reference, hypothesis, config, rouge_l_mode)
        case_counts.append(counts)
        r1, r2, rl = (RougeScore.from_counts(*counts[m]) for m in ("rouge1", "rouge2", "rougeL"))
        cases.append(CaseScore(pair_id, r1, r2, rl, hyp_words=len(hypothesis.split())))
    if aggregation == "mean_of_cases":
        aggregates = aggregate_case_scores(cases)
    else:
        aggregates = _aggregate_pooled(case_counts)
    return EvalReport(
        config=scoring_config_echo(config, rouge_l_mode, aggregation),
        cases=cases,
        aggregates=aggregates,
        mean_hypothesis_words=round(_mean([case.hyp_words for case in cases]), 2),
        scored_case_count=len(cases),
    )


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class ClassificationReport:
    """Per-class precision/recall/F1 plus macro and binary summaries.

    ``macro_f1`` is the unweighted mean over ``labels``; labels absent
    from both gold and predictions score 0 and are listed in
    ``absent_labels``. ``binary_f1`` is the F1 of the argumentative class
    after collapsing the three argument roles.
    """

    per_class: Mapping[ArgRole, ClassMetrics]
    macro_f1: float
    binary_f1: float
    labels: tuple[ArgRole, ...]
    absent_labels: tuple[ArgRole, ...] = ()

    def to_dict(self) -> dict:
        return {
            "per_class": {
                role.value: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "support": m.support,
                }
                for role, m in self.per_class.items()
            },
            "macro_f1": self.macro_f1,
            "binary_f1": self.binary_f1,
            "labels": [role.value for role in self.labels],
            "absent_labels": [role.value for role in self.absent_labels],
        }


def _prf(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def classification_report(
    gold: Sequence[ArgRole],
    predicted: Sequence[ArgRole],
    labels: Sequence[ArgRole] | None = None,
) -> ClassificationReport:
    """Role-prediction quality against gold labels.

    ``labels`` defaults to all four roles; a subset restricts the macro
    average (useful for fixtures exercising fewer classes).
    """
    if len(gold) != len(predicted):
        raise LengthMismatch(f"gold has {len(gold)} labels, predicted has {len(predicted)}")
    if not gold:
        raise EmptyInput("no labels to score")
    label_list = tuple(labels) if labels is not None else tuple(ArgRole)
    per_class = {}
    absent = []
    for label in label_list:
        tp = sum(1 for g, p in zip(gold, predicted) if g == label and p == label)
        fp = sum(1 for g, p in zip(gold, predicted) if g != label and p == label)
        fn = sum(1 for g, p in zip(gold, predicted) if g == label and p != label)
        support = tp + fn
        precision, recall, f1 = _prf(tp, fp, fn)
        per_class[label] = ClassMetrics(precision, recall, f1, support)
        if support == 0 and tp + fp == 0:
            absent.append(label)
    macro_f1 = _mean([per_class[label].f1 for label in label_list])

    bin_tp = sum(1 for g, p in zip(gold, predicted) if g.is_argumentative and p.is_argumentative)
    bin_fp = sum(1 for g, p in zip(gold, predicted) if not g.is_argumentative and p.is_argumentative)
    bin_fn = sum(1 for g, p in zip(gold, predicted) if g.is_argumentative and not p.is_argumentative)
    _, _, binary_f1 = _prf(bin_tp, bin_fp, bin_fn)

    return ClassificationReport(
        per_class=per_class,
        macro_f1=macro_f1,
        binary_f1=binary_f1,
        labels=label_list,
        absent_labels=tuple(absent),
    )
