"""
Wrapping argumentative sentences in marker tokens
=================================================

A document becomes one long input string in which each argumentative
sentence is fenced by special tokens. The generic scheme uses a single
pair for all three roles; the role-aware scheme uses a pair per role.
Both round-trip: stripping recovers the plain text and the span layout.
"""

from argsum import (
    ArgRole,
    CaseRecord,
    MarkerScheme,
    Sentence,
    downgrade_scheme,
    inject_markers,
    marker_vocabulary,
    strip_markers,
    truncate_words,
)

case = CaseRecord(
    id="demo",
    doc=(
        Sentence("the appellant seeks leave to appeal the costs order", ArgRole.ISSUE),
        Sentence("counsel filed written submissions in early march", ArgRole.NON_ARGUMENT),
        Sentence("the trial judge misapplied the governing statute", ArgRole.REASON),
        Sentence("the appeal is allowed with costs", ArgRole.CONCLUSION),
    ),
    summary=(Sentence("appeal allowed", ArgRole.CONCLUSION),),
)

for scheme in (MarkerScheme.BINARY2, MarkerScheme.ROLES6):
    print(f"-- {scheme.value}: vocabulary {sorted(marker_vocabulary(scheme))}")
    marked = inject_markers(case.doc, scheme)
    print(marked.text)

    plain, spans = strip_markers(marked.text, scheme)
    print("roundtrip text intact:", plain == " ".join(s.text for s in case.doc))
    print("recovered spans:", [(span.role, span.start, span.end) for span in spans])
    print()

# Role-aware markup downgrades to the generic scheme token-for-token.
roles6 = inject_markers(case.doc, MarkerScheme.ROLES6)
binary2 = inject_markers(case.doc, MarkerScheme.BINARY2)
print("downgrade equals direct generic markup:", downgrade_scheme(roles6.text) == binary2.text)

# Markers are injected before truncation, so they spend word budget like
# any other token. A tight limit can cut a trailing argument entirely.
tight = truncate_words(binary2.text, 14)
print("first 14 words of the marked input:")
print(tight)
