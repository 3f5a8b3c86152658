"""
Scoring summaries with ROUGE
============================

"""

from argsum import TokenizerConfig, evaluate_corpus, rouge_l, rouge_n, score_pair

# Recall counts reference n-grams found in the hypothesis; precision
# counts hypothesis n-grams found in the reference; F1 balances both.
reference = "the cat sat on the mat"
hypothesis = "the cat sat"

for n in (1, 2):
    score = rouge_n(reference, hypothesis, n)
    print(f"rouge-{n}: P={score.precision:.4f} R={score.recall:.4f} F={score.f1:.4f}")

# ROUGE-L rewards in-order overlap without requiring contiguity.
score = rouge_l(reference, hypothesis)
print(f"rouge-L: P={score.precision:.4f} R={score.recall:.4f} F={score.f1:.4f}")

# The union variant treats each newline-separated reference line as its
# own sequence and merges the matched positions before clipping. A
# hypothesis that restates the reference lines out of order keeps full
# credit under union but loses half of it under one global sequence.
multi_line_ref = "the appeal is allowed\ncosts follow the event"
hyp = "costs follow the event the appeal is allowed"
print("sequence:", rouge_l(multi_line_ref, hyp).recall)
print("union:   ", rouge_l(multi_line_ref, hyp, mode="union").recall)

# score_pair bundles all three metrics for one reference/hypothesis pair.
r1, r2, rl = score_pair(reference, hypothesis)
print("bundled:", {"rouge1": round(r1.f1, 4), "rouge2": round(r2.f1, 4), "rougeL": round(rl.f1, 4)})

# Corpus-level aggregation averages per-case F scores on a 0-100 scale by
# default; pooled aggregation merges the raw counts first, which weights
# long cases more heavily.
pairs = [
    ("the appeal is allowed", "the appeal is allowed", "c1"),
    ("costs follow the event in this court", "costs were awarded", "c2"),
]
report = evaluate_corpus(pairs, TokenizerConfig())
print("mean of cases:", report.aggregates["rouge1"]["f1"])
pooled = evaluate_corpus(pairs, TokenizerConfig(), aggregation="pooled")
print("pooled:       ", pooled.aggregates["rouge1"]["f1"])
