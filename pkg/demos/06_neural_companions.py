"""
Driving the neural companion package through the file formats
=============================================================

The models live in a separate package (argsum-modelbridge) that never
imports this library: corpus files go in, predictions and hypotheses
files come out, and the pipeline CLI consumes them unchanged. This
script trains toy-sized models for one epoch, so the summaries are
noise; the point is the plumbing.
"""

import json
import random
import subprocess
import tempfile
from pathlib import Path

from modelbridge import TrainingConfig, generate_summaries, predict_roles, train_classifier, train_summarizer

work = Path(tempfile.mkdtemp(prefix="companions-"))
rng = random.Random(5)
WORDS = "court appeal damages breach statute remedy evidence judgment".split()
ROLES = ("issue", "reason", "conclusion", "non_irc")

# Write a tiny corpus and a fixed split, in the pipeline's own formats.
with open(work / "corpus.jsonl", "w") as fh:
    for i in range(5):
        doc = [
            {"text": " ".join(rng.choice(WORDS) for _ in range(6)), "role": rng.choice(ROLES)}
            for _ in range(4)
        ]
        summary = [{"text": " ".join(rng.choice(WORDS) for _ in range(5)), "role": "conclusion"}]
        fh.write(json.dumps({"id": f"case-{i}", "doc": doc, "summary": summary}) + "\n")
(work / "split.json").write_text(json.dumps({
    "seed": 0, "train": ["case-0", "case-1", "case-2"],
    "validation": ["case-3"], "test": ["case-4"],
}))

# Oracle-role markup provides the summarizer's training inputs.
subprocess.run(["argsum", "markup", str(work / "corpus.jsonl"), str(work / "split.json"),
                "--scheme", "binary2", "--limit", "bart", "--out", str(work / "marked")], check=True)

config = TrainingConfig(max_epochs=1, batch_size=4)
train_classifier(work / "corpus.jsonl", work / "corpus.jsonl", config, work / "clf")
predict_roles(work / "clf", work / "corpus.jsonl", work / "predictions.jsonl")
print("predicted roles:", json.loads((work / "predictions.jsonl").read_text().splitlines()[0]))

# Predicted roles drive a second round of markup: the classifier's view
# of the documents replaces the gold annotation.
subprocess.run(["argsum", "markup", str(work / "corpus.jsonl"), str(work / "split.json"),
                "--roles", str(work / "predictions.jsonl"), "--out", str(work / "marked_pred")], check=True)

summ_config = TrainingConfig(max_epochs=1, batch_size=4, selection_metric="rouge2")
train_summarizer(work / "marked" / "train.marked.jsonl",
                 work / "marked" / "validation.marked.jsonl", summ_config, work / "summ")
generate_summaries(work / "summ", work / "marked" / "test.marked.jsonl", work / "hypotheses.jsonl")

# The generated file scores like any other hypotheses file.
subprocess.run(["argsum", "score", str(work / "corpus.jsonl"), str(work / "hypotheses.jsonl"),
                "--split", str(work / "split.json"), "--part", "test", "--out", str(work / "scored")], check=True)
scores = json.loads((work / "scored" / "scores.json").read_text())
print("aggregates:", {k: v["f1"] for k, v in scores["aggregates"].items()})
print("artifacts under:", work)
