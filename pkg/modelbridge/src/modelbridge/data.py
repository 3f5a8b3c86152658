"""Readers and writers for the pipeline's JSON-lines file formats.

This package never imports the pipeline library; the files are the
interface. Corpus records carry a sentence-split document and reference
summary with one role per sentence, marked records carry ready-to-train
input/target text pairs, and the two output formats (predictions,
hypotheses) are what the pipeline's ``markup --roles`` and ``score``
commands expect to read back.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

ROLE_NAMES = ("issue", "reason", "conclusion", "non_irc")
ARGUMENTATIVE_ROLES = frozenset({"issue", "reason", "conclusion"})
SCHEME_NAMES = ("binary2", "roles6")


class FormatError(ValueError):
    """Raised when an input file does not match its documented format."""


@dataclass(frozen=True)
class Case:
    """One corpus record: sentence/role pairs for document and summary."""

    id: str
    doc: tuple[tuple[str, str], ...]
    summary: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class MarkedRecord:
    id: str
    scheme: str
    input_text: str
    target_text: str


def _parse_sentences(entries: object, path: str, line_no: int, which: str) -> tuple[tuple[str, str], ...]:
    if not isinstance(entries, list):
        raise FormatError(f"{path}:{line_no}: {which} must be a list")
    parsed: list[tuple[str, str]] = []
    for entry in entries:
        if not isinstance(entry, dict) or not isinstance(entry.get("text"), str):
            raise FormatError(f"{path}:{line_no}: each {which} entry needs a string 'text'")
        role = entry.get("role")
        if role not in ROLE_NAMES:
            raise FormatError(f"{path}:{line_no}: unknown role {role!r} in {which}")
        parsed.append((entry["text"], role))
    return tuple(parsed)


def _iter_jsonl(path: str | Path) -> Iterable[tuple[int, dict]]:
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as err:
                raise FormatError(f"{path}:{line_no}: not valid JSON ({err.msg})") from err
            if not isinstance(raw, dict):
                raise FormatError(f"{path}:{line_no}: each line must hold a JSON object")
            yield line_no, raw


def read_corpus(path: str | Path) -> list[Case]:
    cases: list[Case] = []
    seen: set[str] = set()
    for line_no, raw in _iter_jsonl(path):
        case_id = raw.get("id")
        if not isinstance(case_id, str) or not case_id:
            raise FormatError(f"{path}:{line_no}: missing or empty 'id'")
        if case_id in seen:
            raise FormatError(f"{path}:{line_no}: duplicate case id {case_id!r}")
        seen.add(case_id)
        doc = _parse_sentences(raw.get("doc"), str(path), line_no, "doc")
        summary = _parse_sentences(raw.get("summary"), str(path), line_no, "summary")
        if not doc:
            raise FormatError(f"{path}:{line_no}: case {case_id!r} has an empty document")
        cases.append(Case(id=case_id, doc=doc, summary=summary))
    if not cases:
        raise FormatError(f"{path}: no corpus records found")
    return cases


def read_marked(path: str | Path) -> list[MarkedRecord]:
    records: list[MarkedRecord] = []
    seen: set[str] = set()
    for line_no, raw in _iter_jsonl(path):
        case_id = raw.get("id")
        if not isinstance(case_id, str) or not case_id:
            raise FormatError(f"{path}:{line_no}: missing or empty 'id'")
        if case_id in seen:
            raise FormatError(f"{path}:{line_no}: duplicate case id {case_id!r}")
        seen.add(case_id)
        scheme = raw.get("scheme")
        if scheme not in SCHEME_NAMES:
            raise FormatError(f"{path}:{line_no}: unknown scheme {scheme!r}")
        input_text = raw.get("input_text")
        target_text = raw.get("target_text")
        if not isinstance(input_text, str) or not isinstance(target_text, str):
            raise FormatError(f"{path}:{line_no}: input_text and target_text must be strings")
        records.append(MarkedRecord(id=case_id, scheme=scheme, input_text=input_text, target_text=target_text))
    if not records:
        raise FormatError(f"{path}: no marked records found")
    return records


def atomic_write_text(path: str | Path, text: str) -> None:
    target = Path(path)
    fd, tmp_name = tempfile.mkstemp(dir=target.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def write_predictions(rows: Iterable[tuple[str, Sequence[str]]], path: str | Path) -> None:
    lines = [
        json.dumps({"id": case_id, "roles": list(roles)}, ensure_ascii=False)
        for case_id, roles in rows
    ]
    atomic_write_text(path, "\n".join(lines) + ("\n" if lines else ""))


def write_hypotheses(rows: Iterable[tuple[str, str]], path: str | Path) -> None:
    lines = [
        json.dumps({"id": case_id, "summary": summary}, ensure_ascii=False)
        for case_id, summary in rows
    ]
    atomic_write_text(path, "\n".join(lines) + ("\n" if lines else ""))


def count_words(text: str) -> int:
    return len(text.split())


def truncate_words(text: str, limit: int) -> str:
    """Keep the first ``limit`` whitespace-delimited words."""
    if limit < 1:
        raise ValueError(f"word limit must be at least 1, got {limit}")
    return " ".join(text.split()[:limit])
