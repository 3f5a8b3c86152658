"""Argument-role marker injection, stripping, scheme downgrade and truncation.

Markers are standalone whitespace-delimited tokens, never glued to words,
so word counting and subword tokenizers both see them as single units.
Truncation counts whitespace words (markers included) and may leave an
open marker without its close marker; that mirrors what a fixed-length
encoder actually receives.

Marked-corpus file: JSONL, one object per line with ``id``, ``scheme``
("binary2" | "roles6"), ``input_text`` (marked, truncated) and
``target_text`` (marker-free reference summary).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .corpus import ArgRole, MarkerCollision, Sentence, RESERVED_MARKER_TOKENS


class BadLimit(ValueError):
    pass


class MarkerScheme(Enum):
    """Marker-token granularity: one generic pair, or one pair per role."""

    BINARY2 = "binary2"
    ROLES6 = "roles6"


_IRC_PAIR = ("<IRC>", "</IRC>")
_ROLE_PAIRS = {
    ArgRole.ISSUE: ("<Issue>", "</Issue>"),
    ArgRole.REASON: ("<Reason>", "</Reason>"),
    ArgRole.CONCLUSION: ("<Conclusion>", "</Conclusion>"),
}
_DOWNGRADE = {
    "<Issue>": "<IRC>",
    "<Reason>": "<IRC>",
    "<Conclusion>": "<IRC>",
    "</Issue>": "</IRC>",
    "</Reason>": "</IRC>",
    "</Conclusion>": "</IRC>",
}


def marker_vocabulary(scheme: MarkerScheme) -> list[str]:
    """Reserved tokens of a scheme, open/close pairs in role order."""
    if scheme is MarkerScheme.BINARY2:
        return list(_IRC_PAIR)
    vocabulary = []
    for role in (ArgRole.ISSUE, ArgRole.REASON, ArgRole.CONCLUSION):
        vocabulary.extend(_ROLE_PAIRS[role])
    return vocabulary


def _pair_for(role: ArgRole, scheme: MarkerScheme) -> tuple[str, str]:
    if scheme is MarkerScheme.BINARY2:
        return _IRC_PAIR
    return _ROLE_PAIRS[role]


@dataclass(frozen=True)
class MarkedDocument:
    text: str
    scheme: MarkerScheme
    source_id: str = ""


@dataclass(frozen=True)
class RoleSpan:
    """A recovered marker span over the clean token sequence.

    ``start``/``end`` are half-open token indices into the marker-free
    text. ``role`` is None for the generic argumentative pair of the
    binary scheme. Unbalanced markers yield ``degenerate`` spans.
    """

    role: ArgRole | None
    start: int
    end: int
    degenerate: bool = False


def inject_markers(
    sentences: Sequence[Sentence],
    scheme: MarkerScheme,
    source_id: str = "",
) -> MarkedDocument:
    """Wrap argumentative sentences in marker tokens; join with single spaces.

    Non-argumentative sentences pass through unchanged. Under BINARY2 every
    argumentative role maps to the <IRC> pair; under ROLES6 each role gets
    its own pair. Raises MarkerCollision if any sentence already contains a
    reserved token of either scheme.
    """
    pieces = []
    for sentence in sentences:
        for token in RESERVED_MARKER_TOKENS:
            if token in sentence.text:
                raise MarkerCollision(
                    f"sentence text contains reserved marker {token!r}", case_id=source_id or None
                )
        if sentence.role.is_argumentative:
            open_token, close_token = _pair_for(sentence.role, scheme)
            pieces.append(f"{open_token} {sentence.text} {close_token}")
        else:
            pieces.append(sentence.text)
    return MarkedDocument(text=" ".join(pieces), scheme=scheme, source_id=source_id)


def strip_markers(text: str, scheme: MarkerScheme) -> tuple[str, list[RoleSpan]]:
    """Remove a scheme's marker tokens and recover the role spans.

    Tolerates unbalanced input: an open marker with no matching close (or
    the reverse) is still removed, and reported as a degenerate span. Only
    tokens of the given scheme are touched.
    """
    open_roles = {_pair_for(role, scheme)[0]: (role if scheme is MarkerScheme.ROLES6 else None)
                  for role in _ROLE_PAIRS}
    close_roles = {_pair_for(role, scheme)[1]: (role if scheme is MarkerScheme.ROLES6 else None)
                   for role in _ROLE_PAIRS}
    clean: list[str] = []
    spans: list[RoleSpan] = []
    pending: tuple[ArgRole | None, int] | None = None
    for token in text.split():
        if token in open_roles:
            if pending is not None:
                spans.append(RoleSpan(pending[0], pending[1], len(clean), degenerate=True))
            pending = (open_roles[token], len(clean))
        elif token in close_roles:
            if pending is not None and pending[0] == close_roles[token]:
                spans.append(RoleSpan(pending[0], pending[1], len(clean)))
                pending = None
            else:
                spans.append(RoleSpan(close_roles[token], len(clean), len(clean), degenerate=True))
        else:
            clean.append(token)
    if pending is not None:
        spans.append(RoleSpan(pending[0], pending[1], len(clean), degenerate=True))
    return " ".join(clean), spans


def strip_all_markers(text: str) -> str:
    """Drop every reserved marker token of both schemes (no span recovery)."""
    reserved = set(RESERVED_MARKER_TOKENS)
    return " ".join(token for token in text.split() if token not in reserved)


def truncate_words(text: str, limit: int) -> str:
    """Keep the first ``limit`` whitespace words, rejoined by single spaces.

    Marker tokens count as words, and an open marker whose close marker
    falls beyond the limit is retained: naive encoder truncation is allowed
    to unbalance markers. Whitespace is normalized to single spaces.
    """
    if limit < 1:
        raise BadLimit(f"word limit must be >= 1, got {limit}")
    return " ".join(text.split()[:limit])


def downgrade_scheme(text: str) -> str:
    """Map ROLES6 markers to the binary <IRC> pair, token by token.

    For any sentence list S, downgrade_scheme(inject(S, ROLES6)) equals
    inject(S, BINARY2) exactly.
    """
    return " ".join(_DOWNGRADE.get(token, token) for token in text.split())


def marked_record_to_dict(document: MarkedDocument, target_text: str) -> dict:
    """One marked-corpus JSONL record (see module docstring)."""
    return {
        "id": document.source_id,
        "scheme": document.scheme.value,
        "input_text": document.text,
        "target_text": target_text,
    }
