"""Pipeline command line: validate, split, markup, score, arg-score, stats.

Every command is deterministic given its inputs and flags: outputs carry
no timestamps, files are written atomically (temp + rename), and reports
embed the resolved configuration. Exit codes: 0 success, 1 domain error,
2 I/O or usage error.

Predictions file (predicted-role mode): one JSON object per line with
``id`` and ``roles``, an array of wire role names, one per document
sentence in order.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from . import stats as stats_mod
from .argeval import MissingHypothesis, evaluate_argumentativeness, load_hypotheses
from .corpus import (
    ArgRole,
    CaseRecord,
    DuplicateId,
    MalformedRecord,
    Sentence,
    load_corpus,
    load_split,
    parse_role,
    split_corpus,
    split_to_dict,
)
from .markup import (
    BadLimit,
    MarkedDocument,
    MarkerScheme,
    inject_markers,
    marked_record_to_dict,
    strip_all_markers,
    truncate_words,
)
from .metrics import DEFAULT_TOKENIZER, LengthMismatch, TokenizerConfig, evaluate_corpus

PRESET_LIMITS = {"bart": 1024, "led": 6144}
SPLIT_PARTS = ("train", "validation", "test")


class MissingPredictions(ValueError):
    def __init__(self, missing_ids: Sequence[str]):
        self.missing_ids = tuple(missing_ids)
        preview = ", ".join(self.missing_ids[:5])
        suffix = "..." if len(self.missing_ids) > 5 else ""
        super().__init__(f"{len(self.missing_ids)} case(s) lack role predictions: {preview}{suffix}")


@dataclass(frozen=True)
class PipelineConfig:
    """Resolved run configuration, echoed into every artifact."""

    scheme: MarkerScheme
    truncation_limit: int
    role_source: str = "oracle"
    tokenizer: TokenizerConfig = DEFAULT_TOKENIZER
    seed: int = 0

    def __post_init__(self):
        if self.truncation_limit < 1:
            raise BadLimit(f"truncation limit must be >= 1, got {self.truncation_limit}")

    def to_dict(self) -> dict:
        return {
            "scheme": self.scheme.value,
            "truncation_limit": self.truncation_limit,
            "role_source": self.role_source,
            "tokenizer": {
                "lowercase": self.tokenizer.lowercase,
                "stemming": self.tokenizer.stemming,
                "token_pattern": self.tokenizer.token_pattern,
            },
            "seed": self.seed,
        }


@dataclass(frozen=True)
class RolePredictions:
    """Predicted roles per case id, one role per document sentence."""

    roles: Mapping[str, tuple[ArgRole, ...]]

    def resolve(self, record: CaseRecord) -> tuple[Sentence, ...]:
        """Document sentences with predicted roles substituted for gold."""
        predicted = self.roles.get(record.id)
        if predicted is None:
            raise MissingPredictions([record.id])
        if len(predicted) != len(record.doc):
            raise LengthMismatch(
                f"case {record.id!r}: {len(predicted)} predicted roles "
                f"for {len(record.doc)} document sentences"
            )
        return tuple(Sentence(s.text, role) for s, role in zip(record.doc, predicted))


def load_predictions(path: str | Path) -> RolePredictions:
    roles: dict[str, tuple[ArgRole, ...]] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            if not line.strip():
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as err:
                raise MalformedRecord(f"line {lineno}: invalid JSON: {err}") from None
            if not isinstance(payload, dict) or "id" not in payload or "roles" not in payload:
                raise MalformedRecord(f"line {lineno}: expected an object with 'id' and 'roles'")
            case_id = payload["id"]
            if not isinstance(case_id, str) or not isinstance(payload["roles"], list):
                raise MalformedRecord(f"line {lineno}: 'id' must be a string, 'roles' an array")
            if case_id in roles:
                raise DuplicateId(f"duplicate prediction id {case_id!r}")
            roles[case_id] = tuple(parse_role(name) for name in payload["roles"])
    return RolePredictions(roles=roles)


def _atomic_write_text(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _write_json(path: Path, payload: dict) -> None:
    _atomic_write_text(path, json.dumps(payload, ensure_ascii=False, indent=2) + "\n")


def _write_lines(path: Path, lines: Sequence[str]) -> None:
    _atomic_write_text(path, "\n".join(lines) + "\n" if lines else "")


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _load_corpus_strict(path: str | Path) -> list[CaseRecord]:
    """Load a corpus, aborting on any validation error (run validate for detail)."""
    records, report = load_corpus(path)
    if not report.is_valid:
        first = report.errors[0]
        raise MalformedRecord(
            f"corpus has {len(report.errors)} validation error(s); "
            f"first ({first.case_id}): {first.message}. "
            f"Run 'argsum validate' for the full report."
        )
    return records

def _select_cases(records: Sequence[CaseRecord], args: argparse.Namespace) -> list[CaseRecord]:
    """Optionally restrict scoring to one split part, in split order."""
    if not getattr(args, "split", None):
        return list(records)
    split = load_split(args.split)
    wanted = getattr(split, args.part)
    by_id = {record.id: record for record in records}
    missing = [case_id for case_id in wanted if case_id not in by_id]
    if missing:
        raise MalformedRecord(
            f"split part {args.part!r} references {len(missing)} id(s) missing "
            f"from the corpus, e.g. {missing[0]!r}"
        )
    return [by_id[case_id] for case_id in wanted]


def _plain_summary(record: CaseRecord) -> str:
    return " ".join(sentence.text for sentence in record.summary)


def cmd_validate(args: argparse.Namespace) -> int:
    records, report = load_corpus(args.corpus)
    out = _out_dir(args)
    _write_json(out / "validation_report.json", report.to_dict())
    print(f"cases: {report.case_count}  errors: {len(report.errors)}")
    for issue in report.errors[:10]:
        print(f"  [{issue.kind}] {issue.case_id}: {issue.message}")
    if len(report.errors) > 10:
        print(f"  ... and {len(report.errors) - 10} more (see validation_report.json)")
    return 0 if report.is_valid else 1


def cmd_split(args: argparse.Namespace) -> int:
    records = _load_corpus_strict(args.corpus)
    split = split_corpus(records, seed=args.seed)
    out = _out_dir(args)
    _write_json(out / "split.json", split_to_dict(split))
    print(
        f"split {len(records)} cases with seed {split.seed}: "
        f"train={len(split.train)} validation={len(split.validation)} test={len(split.test)}"
    )
    return 0


def cmd_markup(args: argparse.Namespace) -> int:
    records = _load_corpus_strict(args.corpus)
    split = load_split(args.split)
    config = PipelineConfig(
        scheme=MarkerScheme(args.scheme),
        truncation_limit=args.limit,
        role_source=args.roles,
        seed=split.seed,
    )
    predictions = None
    if config.role_source != "oracle":
        predictions = load_predictions(config.role_source)

    by_id = {record.id: record for record in records}
    all_ids = [case_id for part in SPLIT_PARTS for case_id in getattr(split, part)]
    missing_cases = [case_id for case_id in all_ids if case_id not in by_id]
    if missing_cases:
        raise MalformedRecord(
            f"split references {len(missing_cases)} id(s) missing from the corpus, "
            f"e.g. {missing_cases[0]!r}"
        )
    if predictions is not None:
        uncovered = [case_id for case_id in all_ids if case_id not in predictions.roles]
        if uncovered:
            raise MissingPredictions(uncovered)

    out = _out_dir(args)
    for part in SPLIT_PARTS:
        lines = []
        for case_id in getattr(split, part):
            record = by_id[case_id]
            doc = record.doc if predictions is None else predictions.resolve(record)
            marked = inject_markers(doc, config.scheme, source_id=record.id)
            truncated = MarkedDocument(
                text=truncate_words(marked.text, config.truncation_limit),
                scheme=config.scheme,
                source_id=record.id,
            )
            lines.append(
                json.dumps(
                    marked_record_to_dict(truncated, _plain_summary(record)), ensure_ascii=False
                )
            )
        _write_lines(out / f"{part}.marked.jsonl", lines)
        print(f"{part}: {len(lines)} marked case(s) -> {out / f'{part}.marked.jsonl'}")
    _write_json(out / "markup.config.json", config.to_dict())
    return 0


def _tokenizer_from(args: argparse.Namespace) -> TokenizerConfig:
    return TokenizerConfig(stemming=bool(getattr(args, "stemming", False)))


def cmd_score(args: argparse.Namespace) -> int:
    records = _load_corpus_strict(args.corpus)
    hypotheses = load_hypotheses(args.hypotheses)
    cases = _select_cases(records, args)
    missing = [record.id for record in cases if record.id not in hypotheses]
    if missing:
        raise MissingHypothesis(missing)
    pairs = [
        (_plain_summary(record), strip_all_markers(hypotheses[record.id]), record.id)
        for record in cases
    ]
    report = evaluate_corpus(pairs, _tokenizer_from(args))
    out = _out_dir(args)
    _write_json(out / "scores.json", report.to_dict())
    _write_lines(out / "scores.csv", report.to_csv_rows())
    agg = report.aggregates
    print(
        f"scored {report.scored_case_count} case(s)  "
        f"R1 {agg['rouge1']['f1']:.2f}  R2 {agg['rouge2']['f1']:.2f}  RL {agg['rougeL']['f1']:.2f}"
    )
    return 0


def cmd_argscore(args: argparse.Namespace) -> int:
    records = _load_corpus_strict(args.corpus)
    hypotheses = load_hypotheses(args.hypotheses)
    cases = _select_cases(records, args)
    report = evaluate_argumentativeness(cases, hypotheses, _tokenizer_from(args))
    out = _out_dir(args)
    _write_json(out / "arg_scores.json", report.to_dict())
    _write_lines(out / "arg_scores.csv", report.to_csv_rows())
    agg = report.aggregates
    print(
        f"scored {report.scored_case_count} case(s), excluded {report.excluded_case_count}  "
        f"R1 {agg['rouge1']['f1']:.2f}  R2 {agg['rouge2']['f1']:.2f}  "
        f"RL {agg['rougeL']['f1']:.2f}  mean words {report.mean_hypothesis_words:.2f}"
    )
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    records = _load_corpus_strict(args.corpus)
    report = stats_mod.stats_report(records)
    positions = stats_mod.position_records(records)
    out = _out_dir(args)
    _write_json(out / "stats.json", report)
    _write_lines(out / "fractions.csv", stats_mod.fractions_csv_rows(records))
    _write_lines(out / "role_counts.csv", stats_mod.role_counts_csv_rows(records))
    _write_lines(out / "positions.csv", stats_mod.positions_csv_rows(positions))
    _write_lines(out / "lengths.csv", stats_mod.lengths_csv_rows(records))
    _write_lines(out / "coverage.csv", stats_mod.coverage_csv_rows(positions))
    print(
        f"stats for {report['case_count']} case(s): "
        f"{report['argument_position_count']} argument position(s); "
        f"outputs in {out}"
    )
    return 0


def _parse_limit(value: str) -> int:
    if value in PRESET_LIMITS:
        return PRESET_LIMITS[value]
    try:
        limit = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"limit must be 'bart', 'led' or a positive integer, got {value!r}"
        ) from None
    if limit < 1:
        raise argparse.ArgumentTypeError(f"limit must be >= 1, got {limit}")
    return limit


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="argsum",
        description="Argument-aware legal summarization pipeline: corpus prep, marker injection, scoring, analytics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=".", help="output directory (default: current directory)")

    p = sub.add_parser("validate", help="check a corpus file and write a validation report")
    p.add_argument("corpus", help="corpus JSONL file")
    add_out(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("split", help="deterministic seeded train/validation/test split")
    p.add_argument("corpus", help="corpus JSONL file")
    p.add_argument("--seed", type=int, default=0, help="shuffle seed (default 0)")
    add_out(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("markup", help="emit marked+truncated inputs and plain targets per split part")
    p.add_argument("corpus", help="corpus JSONL file")
    p.add_argument("split", help="split JSON file")
    p.add_argument(
        "--scheme",
        choices=[scheme.value for scheme in MarkerScheme],
        default=MarkerScheme.BINARY2.value,
        help="marker scheme (default binary2)",
    )
    p.add_argument(
        "--limit",
        type=_parse_limit,
        default="bart",
        help="truncation word limit: 'bart' (1024), 'led' (6144) or an integer (default bart)",
    )
    p.add_argument(
        "--roles",
        default="oracle",
        help="'oracle' for gold roles, or a predictions JSONL path (default oracle)",
    )
    add_out(p)
    p.set_defaults(func=cmd_markup)

    def add_score_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("corpus", help="corpus JSONL file (provides references)")
        p.add_argument("hypotheses", help="hypotheses JSONL file (id + summary per line)")
        p.add_argument("--split", default=None, help="optional split JSON to select one part")
        p.add_argument(
            "--part",
            choices=SPLIT_PARTS,
            default="test",
            help="split part to score when --split is given (default test)",
        )
        p.add_argument("--stemming", action="store_true", help="stem tokens before scoring")
        add_out(p)

    p = sub.add_parser("score", help="ROUGE-1/2/L of hypotheses vs full reference summaries")
    add_score_args(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("arg-score", help="ROUGE vs the argumentative subset of references")
    add_score_args(p)
    p.set_defaults(func=cmd_argscore)

    p = sub.add_parser("stats", help="corpus analytics bundle (CSV + JSON)")
    p.add_argument("corpus", help="corpus JSONL file")
    add_out(p)
    p.set_defaults(func=cmd_stats)

    return parser


def entrypoint(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"io error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(entrypoint())
