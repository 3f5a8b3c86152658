import json

import pytest

from modelbridge import (
    ConfigError,
    TrainingConfig,
    class_weights_from_stats,
    load_config,
    save_config,
)

from _bridge_helpers import run_cli


def test_defaults():
    config = TrainingConfig()
    assert config.learning_rate == 2e-5
    assert config.max_epochs == 10
    assert config.early_stop_patience == 3
    assert config.class_weights == {"argumentative": 1000, "non_argumentative": 1}
    assert config.max_target_words == 512
    assert config.input_limit_words == 1024
    assert config.selection_metric == "f1"


def test_long_context_limit_accepted():
    assert TrainingConfig(input_limit_words=6144).input_limit_words == 6144


@pytest.mark.parametrize(
    "kwargs",
    [
        {"learning_rate": 0.0},
        {"learning_rate": -1e-5},
        {"max_epochs": 0},
        {"early_stop_patience": -1},
        {"input_limit_words": 2048},
        {"max_target_words": 0},
        {"selection_metric": "loss"},
        {"batch_size": 0},
        {"class_weights": {"argumentative": 1000}},
        {"class_weights": {"argumentative": 1000, "non_argumentative": 0}},
        {"class_weights": {"arg": 1000, "non": 1}},
    ],
)
def test_rejects_bad_values(kwargs):
    with pytest.raises(ConfigError):
        TrainingConfig(**kwargs)


def test_dict_roundtrip():
    config = TrainingConfig(max_epochs=2, input_limit_words=6144, selection_metric="rouge2")
    assert TrainingConfig.from_dict(config.to_dict()) == config


def test_from_dict_rejects_unknown_field():
    with pytest.raises(ConfigError, match="warmup"):
        TrainingConfig.from_dict({"warmup": 100})


def test_save_load_roundtrip(tmp_path):
    config = TrainingConfig(seed=3, batch_size=2)
    path = tmp_path / "training_config.json"
    save_config(config, path)
    assert load_config(path) == config
    raw = json.loads(path.read_text(encoding="utf-8"))
    assert raw["learning_rate"] == 2e-5
    assert raw["early_stop_patience"] == 3
    assert raw["max_target_words"] == 512


def test_load_rejects_non_object(tmp_path):
    path = tmp_path / "training_config.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(path)


def test_class_weights_from_stats_report(tmp_path):
    corpus = tmp_path / "corpus.jsonl"
    doc = [{"text": "the court allowed the appeal", "role": "issue"}]
    doc += [{"text": f"procedural step {i}", "role": "non_irc"} for i in range(1000)]
    record = {"id": "c1", "doc": doc, "summary": [{"text": "appeal allowed", "role": "conclusion"}]}
    corpus.write_text(json.dumps(record) + "\n", encoding="utf-8")

    result = run_cli("stats", str(corpus), "--out", str(tmp_path))
    assert result.returncode == 0, result.stderr
    weights = class_weights_from_stats(tmp_path / "stats.json")
    assert weights == {"argumentative": 1000, "non_argumentative": 1}


def test_class_weights_from_stats_rejects_null(tmp_path):
    path = tmp_path / "stats.json"
    path.write_text(json.dumps({"class_weights": None}), encoding="utf-8")
    with pytest.raises(ConfigError):
        class_weights_from_stats(path)
