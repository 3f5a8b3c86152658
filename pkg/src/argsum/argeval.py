"""Argumentativeness scoring: hypotheses vs the argumentative subset of references.

The reference side of each pair is rebuilt from only the reference-summary
sentences carrying an argument role (issue, reason, conclusion), joined in
their original order by single spaces. Cases whose reference has no
argumentative sentence cannot be scored and are excluded from the ROUGE
aggregates; the report counts and names them. The mean hypothesis word
length is computed over all cases, excluded ones included.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .corpus import CaseRecord, DuplicateId, MalformedRecord, Sentence
from .markup import strip_all_markers
from .metrics import (
    DEFAULT_TOKENIZER,
    EvalReport,
    TokenizerConfig,
    _mean,
    evaluate_corpus,
    scoring_config_echo,
)


class MissingHypothesis(ValueError):
    def __init__(self, missing_ids: Sequence[str]):
        self.missing_ids = tuple(missing_ids)
        preview = ", ".join(self.missing_ids[:5])
        suffix = "..." if len(self.missing_ids) > 5 else ""
        super().__init__(f"{len(self.missing_ids)} case(s) lack a hypothesis: {preview}{suffix}")


@dataclass(frozen=True)
class IrcReference:
    """Argumentative portion of one reference summary."""

    id: str
    irc_text: str
    irc_sentence_count: int


def irc_subset(summary: Sequence[Sentence]) -> tuple[str, int]:
    """Keep argumentative sentences in order; join with single spaces."""
    kept = [sentence.text for sentence in summary if sentence.role.is_argumentative]
    return " ".join(kept), len(kept)


def irc_reference(record: CaseRecord) -> IrcReference:
    text, count = irc_subset(record.summary)
    return IrcReference(id=record.id, irc_text=text, irc_sentence_count=count)


def load_hypotheses(path: str | Path) -> dict[str, str]:
    """Read a hypotheses file: one JSON object per line, `id` + `summary`."""
    hypotheses: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            if not line.strip():
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as err:
                raise MalformedRecord(f"line {lineno}: invalid JSON: {err}") from err
            if not isinstance(payload, dict) or "id" not in payload or "summary" not in payload:
                raise MalformedRecord(f"line {lineno}: expected an object with 'id' and 'summary'")
            case_id, summary = payload["id"], payload["summary"]
            if not isinstance(case_id, str) or not isinstance(summary, str):
                raise MalformedRecord(f"line {lineno}: 'id' and 'summary' must be strings")
            if case_id in hypotheses:
                raise DuplicateId(f"duplicate hypothesis id {case_id!r}")
            hypotheses[case_id] = summary
    return hypotheses


def save_hypotheses(hypotheses: Mapping[str, str], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for case_id, summary in hypotheses.items():
            handle.write(json.dumps({"id": case_id, "summary": summary}, ensure_ascii=False) + "\n")


def evaluate_argumentativeness(
    cases: Iterable[CaseRecord],
    hypotheses: Mapping[str, str],
    config: TokenizerConfig = DEFAULT_TOKENIZER,
    rouge_l_mode: str = "sequence",
) -> EvalReport:
    """ROUGE of each hypothesis against its reference's argumentative subset.

    Hypotheses are marker-stripped defensively (generated text may echo
    markers). Raises MissingHypothesis if any case lacks one; extra
    hypothesis ids are ignored.
    """
    cases = list(cases)
    ids = [record.id for record in cases]
    if len(set(ids)) != len(ids):
        raise DuplicateId("case ids are not unique")
    missing = [record.id for record in cases if record.id not in hypotheses]
    if missing:
        raise MissingHypothesis(missing)

    pairs = []
    excluded = []
    hyp_words = []
    for record in cases:
        reference = irc_reference(record)
        hypothesis = strip_all_markers(hypotheses[record.id])
        hyp_words.append(len(hypothesis.split()))
        if reference.irc_sentence_count == 0:
            excluded.append(record.id)
            continue
        pairs.append((reference.irc_text, hypothesis, record.id))

    if pairs:
        report = evaluate_corpus(pairs, config, rouge_l_mode)
    else:
        report = EvalReport(
            config=scoring_config_echo(config, rouge_l_mode),
            cases=[],
            aggregates={
                metric: {"precision": 0.0, "recall": 0.0, "f1": 0.0}
                for metric in ("rouge1", "rouge2", "rougeL")
            },
            mean_hypothesis_words=0.0,
            scored_case_count=0,
        )
    report.config["reference"] = "argumentative_subset"
    report.mean_hypothesis_words = round(_mean(hyp_words), 2)
    report.excluded_case_count = len(excluded)
    report.excluded_ids = tuple(excluded)
    return report
