"""
Corpus statistics: role balance, argument positions, encoder coverage
=====================================================================

"""

import random

from argsum import (
    ArgRole,
    CaseRecord,
    Sentence,
    argumentative_fraction,
    coverage_under_limit,
    derive_class_weights,
    position_records,
    role_counts,
    stats_report,
)

# Synthesize a corpus whose arguments sit late in long documents, the
# shape that makes encoder word limits interesting.
rng = random.Random(3)
WORDS = "court appeal damages breach statute remedy evidence judgment".split()


def filler(n_words: int, role: ArgRole = ArgRole.NON_ARGUMENT) -> Sentence:
    return Sentence(" ".join(rng.choice(WORDS) for _ in range(n_words)), role)


cases = []
for i in range(20):
    preamble = [filler(40) for _ in range(rng.randint(20, 60))]
    argument = [
        filler(20, ArgRole.ISSUE),
        filler(20, ArgRole.REASON),
        filler(20, ArgRole.CONCLUSION),
    ]
    summary = (filler(12, ArgRole.CONCLUSION),)
    cases.append(CaseRecord(id=f"case-{i:02d}", doc=tuple(preamble + argument), summary=summary))

# How argumentative are documents versus reference summaries?
doc_frac, summary_frac = argumentative_fraction(cases)
print(f"document argumentative fraction:  mean {doc_frac.mean:.3f}")
print(f"summary argumentative fraction:   mean {summary_frac.mean:.3f}")

# Raw role counts drive the classifier's loss weights: rare argument
# roles get a large weight, snapped to a round number when close.
counts = role_counts(cases, scope="doc")
print("doc role counts:", {role.value: count for role, count in counts.items()})
print("derived class weights:", derive_class_weights(counts))

# Each argumentative sentence has a word offset from the document start.
positions = position_records(cases)
print("argument positions recorded:", len(positions))
print("first:", positions[0])

# Encoder budgets: how many arguments start within the first N words?
for limit in (1024, 6144):
    covered = coverage_under_limit(positions, limit)
    print(f"arguments starting within {limit:>4} words: {covered:.1%}")

# stats_report bundles everything into one JSON-ready dictionary.
bundle = stats_report(cases)
print("report keys:", sorted(bundle))
