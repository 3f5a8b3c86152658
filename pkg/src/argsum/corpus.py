"""Data model and file I/O for sentence-annotated legal case corpora.

Canonical corpus file: UTF-8 JSONL, one case per line with fields
``id`` (string), ``doc`` and ``summary`` (arrays of ``{"text", "role"}``).
Role strings are lowercase snake_case and parsed strictly:
``issue``, ``reason``, ``conclusion``, ``non_irc``.

Split file: a single JSON object with ``seed``, ``train``, ``validation``
and ``test`` arrays of case ids.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

# Tokens reserved by the marker schemes (see argsum.markup); sentence text
# must never contain any of them, under either scheme.
RESERVED_MARKER_TOKENS: tuple[str, ...] = (
    "<IRC>",
    "</IRC>",
    "<Issue>",
    "</Issue>",
    "<Reason>",
    "</Reason>",
    "<Conclusion>",
    "</Conclusion>",
)


class CorpusError(ValueError):
    """Base class for corpus-format and corpus-contract violations."""

    kind = "corpus_error"

    def __init__(self, message: str, case_id: str | None = None):
        super().__init__(message)
        self.case_id = case_id


class MalformedRecord(CorpusError):
    kind = "malformed_record"


class UnknownRole(CorpusError):
    kind = "unknown_role"


class EmptyDocument(CorpusError):
    kind = "empty_document"


class EmptyField(CorpusError):
    kind = "empty_field"


class MarkerCollision(CorpusError):
    kind = "marker_collision"


class DuplicateId(CorpusError):
    kind = "duplicate_id"


class BadRatios(CorpusError):
    kind = "bad_ratios"


class EmptyCorpus(CorpusError):
    kind = "empty_corpus"


class ArgRole(Enum):
    """Sentence-level argument role; the wire name is the enum value."""

    ISSUE = "issue"
    REASON = "reason"
    CONCLUSION = "conclusion"
    NON_ARGUMENT = "non_irc"

    @property
    def is_argumentative(self) -> bool:
        return self is not ArgRole.NON_ARGUMENT


_ROLE_BY_NAME = {role.value: role for role in ArgRole}


def parse_role(name: str) -> ArgRole:
    """Parse a wire role name. Strict: no case folding, no aliases."""
    try:
        return _ROLE_BY_NAME[name]
    except (KeyError, TypeError):
        raise UnknownRole(f"unknown role {name!r}") from None


@dataclass(frozen=True)
class Sentence:
    text: str
    role: ArgRole


@dataclass(frozen=True)
class CaseRecord:
    id: str
    doc: tuple[Sentence, ...]
    summary: tuple[Sentence, ...]

    def __post_init__(self):
        object.__setattr__(self, "doc", tuple(self.doc))
        object.__setattr__(self, "summary", tuple(self.summary))


@dataclass(frozen=True)
class SplitAssignment:
    train: tuple[str, ...]
    validation: tuple[str, ...]
    test: tuple[str, ...]
    seed: int


@dataclass(frozen=True)
class ValidationIssue:
    case_id: str
    kind: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    case_count: int
    errors: tuple[ValidationIssue, ...]

    @property
    def is_valid(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        return {
            "case_count": self.case_count,
            "is_valid": self.is_valid,
            "errors": [
                {"case_id": e.case_id, "kind": e.kind, "message": e.message}
                for e in self.errors
            ],
        }


def _text_issues(text: object) -> list[tuple[str, str]]:
    """Check one sentence text against the Sentence invariants."""
    if not isinstance(text, str):
        return [(MalformedRecord.kind, f"sentence text must be a string, got {type(text).__name__}")]
    issues = []
    if not text.strip():
        issues.append((EmptyField.kind, "sentence text is empty or all-whitespace"))
    if "\n" in text:
        issues.append((MalformedRecord.kind, "sentence text contains a newline"))
    for token in RESERVED_MARKER_TOKENS:
        if token in text:
            issues.append((MarkerCollision.kind, f"sentence text contains reserved marker {token!r}"))
            break
    return issues


_ERROR_BY_KIND = {
    cls.kind: cls
    for cls in (MalformedRecord, UnknownRole, EmptyDocument, EmptyField, MarkerCollision, DuplicateId)
}


def _raise_issue(kind: str, message: str, case_id: str | None) -> None:
    raise _ERROR_BY_KIND[kind](message, case_id=case_id)


def _parse_sentences(items: object, field_name: str, case_id: str | None) -> tuple[Sentence, ...]:
    if not isinstance(items, list):
        raise MalformedRecord(f"{field_name!r} must be an array of sentences", case_id=case_id)
    sentences = []
    for item in items:
        if not isinstance(item, dict) or "text" not in item or "role" not in item:
            raise MalformedRecord(
                f"each {field_name!r} entry must be an object with 'text' and 'role'", case_id=case_id
            )
        for kind, message in _text_issues(item["text"]):
            _raise_issue(kind, message, case_id)
        try:
            role = parse_role(item["role"])
        except UnknownRole as err:
            raise UnknownRole(str(err), case_id=case_id) from None
        sentences.append(Sentence(text=item["text"], role=role))
    return tuple(sentences)


def parse_case_record(line: str) -> CaseRecord:
    """Parse one canonical JSONL line into a CaseRecord.

    Raises MalformedRecord, UnknownRole, EmptyDocument, EmptyField or
    MarkerCollision; never returns a record violating the type invariants.
    """
    try:
        raw = json.loads(line)
    except json.JSONDecodeError as err:
        raise MalformedRecord(f"invalid JSON: {err}") from None
    if not isinstance(raw, dict):
        raise MalformedRecord("record must be a JSON object")
    case_id = raw.get("id")
    if not isinstance(case_id, str):
        raise MalformedRecord("'id' must be a string")
    if not case_id:
        raise EmptyField("'id' is empty", case_id=case_id)
    doc = _parse_sentences(raw.get("doc"), "doc", case_id)
    summary = _parse_sentences(raw.get("summary"), "summary", case_id)
    if not doc:
        raise EmptyDocument("'doc' has no sentences", case_id=case_id)
    if not summary:
        raise EmptyField("'summary' has no sentences", case_id=case_id)
    return CaseRecord(id=case_id, doc=doc, summary=summary)


def serialize_case_record(record: CaseRecord) -> str:
    """Serialize a CaseRecord to one canonical JSONL line (no newline)."""
    payload = {
        "id": record.id,
        "doc": [{"text": s.text, "role": s.role.value} for s in record.doc],
        "summary": [{"text": s.text, "role": s.role.value} for s in record.summary],
    }
    return json.dumps(payload, ensure_ascii=False)


def load_corpus(path: str | Path) -> tuple[list[CaseRecord], ValidationReport]:
    """Load a corpus file; per-record errors go into the report, never abort.

    Returns all parseable records in file order plus a ValidationReport
    covering parse failures and duplicate ids. Blank lines are skipped.
    """
    records: list[CaseRecord] = []
    issues: list[ValidationIssue] = []
    seen_ids: set[str] = set()
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            if not line.strip():
                continue
            try:
                record = parse_case_record(line)
            except CorpusError as err:
                case_id = err.case_id or f"line {lineno}"
                issues.append(ValidationIssue(case_id, err.kind, str(err)))
                continue
            if record.id in seen_ids:
                issues.append(
                    ValidationIssue(record.id, DuplicateId.kind, f"duplicate case id {record.id!r}")
                )
            seen_ids.add(record.id)
            records.append(record)
    return records, ValidationReport(case_count=len(records), errors=tuple(issues))


def save_corpus(records: Iterable[CaseRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(serialize_case_record(record) + "\n")


def validate_corpus(corpus: Sequence[CaseRecord]) -> ValidationReport:
    """Check id uniqueness and every Sentence/CaseRecord invariant.

    Never raises: each violation becomes a report entry.
    """
    issues: list[ValidationIssue] = []
    seen_ids: set[str] = set()
    for record in corpus:
        if not record.id:
            issues.append(ValidationIssue(record.id, EmptyField.kind, "'id' is empty"))
        if record.id in seen_ids:
            issues.append(
                ValidationIssue(record.id, DuplicateId.kind, f"duplicate case id {record.id!r}")
            )
        seen_ids.add(record.id)
        if not record.doc:
            issues.append(ValidationIssue(record.id, EmptyDocument.kind, "'doc' has no sentences"))
        if not record.summary:
            issues.append(ValidationIssue(record.id, EmptyField.kind, "'summary' has no sentences"))
        for field_name, sentences in (("doc", record.doc), ("summary", record.summary)):
            for position, sentence in enumerate(sentences):
                for kind, message in _text_issues(sentence.text):
                    issues.append(
                        ValidationIssue(record.id, kind, f"{field_name}[{position}]: {message}")
                    )
    return ValidationReport(case_count=len(corpus), errors=tuple(issues))


_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    """One step of the splitmix64 generator: (state) -> (state', output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def seeded_shuffle(items: Sequence, seed: int) -> list:
    """Fisher-Yates shuffle driven by splitmix64.

    Pinned to this named generator (rather than a stdlib RNG) so that equal
    seeds give byte-identical splits in any reimplementation. Indices are
    drawn by modulo; the bias is negligible at corpus scale and the draw is
    part of the pinned behavior.
    """
    out = list(items)
    state = seed & _MASK64
    for i in range(len(out) - 1, 0, -1):
        state, value = _splitmix64(state)
        j = value % (i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def split_corpus(
    corpus: Sequence[CaseRecord],
    ratios: tuple[float, float, float] = (0.8, 0.1, 0.1),
    seed: int = 0,
) -> SplitAssignment:
    """Deterministic seeded train/validation/test partition of the case ids.

    Sizes are floor(r_train*n) and floor(r_val*n) with the remainder going
    to test, except n=1049 with ratios (0.8, 0.1, 0.1) which is pinned to
    (839, 106, 104): those published counts are not pure floor results.
    """
    if not corpus:
        raise EmptyCorpus("cannot split an empty corpus")
    if len(ratios) != 3 or any(r <= 0 for r in ratios):
        raise BadRatios(f"ratios must be three positive numbers, got {ratios!r}")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise BadRatios(f"ratios must sum to 1.0, got {sum(ratios)!r}")
    ids = [record.id for record in corpus]
    if len(set(ids)) != len(ids):
        raise DuplicateId("corpus contains duplicate ids; cannot partition")

    n = len(ids)
    if n == 1049 and all(abs(r - pin) <= 1e-9 for r, pin in zip(ratios, (0.8, 0.1, 0.1))):
        n_train, n_val = 839, 106
    else:
        # The 1e-9 nudge keeps exact-ratio products (e.g. 0.7*10) from
        # flooring one short due to binary rounding.
        n_train = math.floor(ratios[0] * n + 1e-9)
        n_val = math.floor(ratios[1] * n + 1e-9)

    shuffled = seeded_shuffle(ids, seed)
    return SplitAssignment(
        train=tuple(shuffled[:n_train]),
        validation=tuple(shuffled[n_train:n_train + n_val]),
        test=tuple(shuffled[n_train + n_val:]),
        seed=seed,
    )


def split_to_dict(split: SplitAssignment) -> dict:
    return {
        "seed": split.seed,
        "train": list(split.train),
        "validation": list(split.validation),
        "test": list(split.test),
    }


def save_split(split: SplitAssignment, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(split_to_dict(split), handle, ensure_ascii=False, indent=2)
        handle.write("\n")


def load_split(path: str | Path) -> SplitAssignment:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            raw = json.load(handle)
        except json.JSONDecodeError as err:
            raise MalformedRecord(f"invalid split file: {err}") from None
    try:
        return SplitAssignment(
            train=tuple(raw["train"]),
            validation=tuple(raw["validation"]),
            test=tuple(raw["test"]),
            seed=int(raw["seed"]),
        )
    except (KeyError, TypeError) as err:
        raise MalformedRecord(f"split file missing field: {err}") from None
