import json
import shutil

import pytest

from modelbridge import (
    LabelSetMismatch,
    classification_report_dict,
    predict_roles,
    read_corpus,
)

I, R, C, N = 0, 1, 2, 3


class TestReportDict:
    def test_perfect_predictions(self):
        gold = [I, R, C, N, R]
        report = classification_report_dict(gold, list(gold))
        assert report["macro_f1"] == 1.0
        assert report["binary_f1"] == 1.0
        assert report["per_class"]["reason"] == {
            "precision": 1.0,
            "recall": 1.0,
            "f1": 1.0,
            "support": 2,
        }
        assert report["absent_labels"] == []

    def test_mixed_fixture_matches_hand_math(self):
        gold = [I, I, R, R, R]
        predicted = [I, R, R, R, N]
        report = classification_report_dict(gold, predicted)
        # issue: P 1/1, R 1/2 -> F1 2/3; reason: P 2/3, R 2/3 -> F1 2/3
        assert report["per_class"]["issue"]["f1"] == pytest.approx(2 / 3)
        assert report["per_class"]["reason"]["f1"] == pytest.approx(2 / 3)
        assert report["macro_f1"] == pytest.approx((2 / 3 + 2 / 3) / 4)
        assert set(report["absent_labels"]) == {"conclusion"}

    def test_binary_collapse(self):
        gold = [I, N, N]
        predicted = [R, I, N]
        report = classification_report_dict(gold, predicted)
        # argumentative: tp 1 (I->R), fp 1 (N->I), fn 0
        assert report["binary_f1"] == pytest.approx(2 / 3)

    def test_shape_matches_pipeline_report(self):
        report = classification_report_dict([I], [I])
        assert set(report) == {"per_class", "macro_f1", "binary_f1", "labels", "absent_labels"}
        assert report["labels"] == ["issue", "reason", "conclusion", "non_irc"]
        for metrics in report["per_class"].values():
            assert set(metrics) == {"precision", "recall", "f1", "support"}


class TestTrainedArtifact:
    def test_artifact_files(self, classifier_dir):
        names = {path.name for path in classifier_dir.iterdir()}
        assert {"model.safetensors", "tokenizer.json", "training_config.json", "dev_report.json"} <= names

    def test_config_echo(self, classifier_dir):
        config = json.loads((classifier_dir / "training_config.json").read_text(encoding="utf-8"))
        assert config["learning_rate"] == 2e-5
        assert config["early_stop_patience"] == 3
        assert config["class_weights"] == {"argumentative": 1000, "non_argumentative": 1}

    def test_dev_report_covers_all_roles(self, classifier_dir, corpus_file):
        report = json.loads((classifier_dir / "dev_report.json").read_text(encoding="utf-8"))
        assert set(report["per_class"]) == {"issue", "reason", "conclusion", "non_irc"}
        dev_sentences = sum(len(case.doc) for case in read_corpus(corpus_file))
        assert sum(m["support"] for m in report["per_class"].values()) == dev_sentences
        assert 0.0 <= report["macro_f1"] <= 1.0
        assert report["best_epoch"] == 1
        assert report["epochs_run"] == 1


class TestPredictRoles:
    def test_one_line_per_case_one_role_per_sentence(self, classifier_dir, corpus_file, tmp_path):
        out = predict_roles(classifier_dir, corpus_file, tmp_path / "predictions.jsonl")
        cases = read_corpus(corpus_file)
        lines = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
        assert len(lines) == len(cases)
        for case, line in zip(cases, lines):
            assert line["id"] == case.id
            assert len(line["roles"]) == len(case.doc)
            assert all(role in ("issue", "reason", "conclusion", "non_irc") for role in line["roles"])

    def test_predictions_are_deterministic(self, classifier_dir, corpus_file, tmp_path):
        first = predict_roles(classifier_dir, corpus_file, tmp_path / "a.jsonl")
        second = predict_roles(classifier_dir, corpus_file, tmp_path / "b.jsonl")
        assert first.read_bytes() == second.read_bytes()

    def test_label_set_mismatch(self, classifier_dir, corpus_file, tmp_path):
        tampered = tmp_path / "tampered"
        shutil.copytree(classifier_dir, tampered)
        config_path = tampered / "config.json"
        config = json.loads(config_path.read_text(encoding="utf-8"))
        config["id2label"] = {"0": "premise", "1": "reason", "2": "conclusion", "3": "non_irc"}
        config_path.write_text(json.dumps(config), encoding="utf-8")
        with pytest.raises(LabelSetMismatch):
            predict_roles(tampered, corpus_file, tmp_path / "p.jsonl")
