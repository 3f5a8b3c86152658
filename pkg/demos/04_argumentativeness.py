"""
Evaluating summaries against only the argumentative sentences
=============================================================

A generated summary can restate plenty of procedural boilerplate and
still miss the legal argument. This protocol rebuilds each reference
from its argumentative sentences alone, so the scores reward coverage
of issues, reasons, and conclusions specifically.
"""

from argsum import (
    ArgRole,
    CaseRecord,
    Sentence,
    evaluate_argumentativeness,
    irc_reference,
)

cases = [
    CaseRecord(
        id="alpha",
        doc=(Sentence("whether the appeal should be allowed", ArgRole.ISSUE),),
        summary=(
            Sentence("the hearing ran for two days", ArgRole.NON_ARGUMENT),
            Sentence("the appeal is allowed", ArgRole.CONCLUSION),
            Sentence("the statute bars the claim", ArgRole.REASON),
        ),
    ),
    CaseRecord(
        id="beta",
        doc=(Sentence("a costs motion was heard", ArgRole.NON_ARGUMENT),),
        summary=(Sentence("counsel appeared by video", ArgRole.NON_ARGUMENT),),
    ),
]

# The reference for "alpha" keeps only its two argumentative sentences,
# joined in order with single spaces.
ref = irc_reference(cases[0])
print("argumentative reference:", repr(ref.irc_text))
print("sentences kept:", ref.irc_sentence_count)

# "beta" has no argumentative summary sentences at all, so it cannot be
# scored under this protocol; it is excluded and counted.
hypotheses = {
    "alpha": "the appeal is allowed because the statute bars the claim",
    "beta": "counsel appeared by video",
}
report = evaluate_argumentativeness(cases, hypotheses)
print("scored cases:", report.scored_case_count)
print("excluded cases:", report.excluded_case_count, list(report.excluded_ids))
print("aggregates:", {k: v["f1"] for k, v in report.aggregates.items()})

# Mean hypothesis length is reported over every case, excluded or not,
# because generation length is a property of the system, not the scoring.
print("mean hypothesis words:", report.mean_hypothesis_words)
