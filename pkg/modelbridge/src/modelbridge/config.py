"""Training configuration shared by the classifier and the summarizer.

The resolved configuration is serialized next to every checkpoint so a
saved model directory is self-describing: anyone can read ``config.json``
and see exactly which knobs produced the artifact.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

INPUT_LIMIT_CHOICES = (1024, 6144)
SELECTION_METRICS = ("f1", "rouge2")

_WEIGHT_KEYS = frozenset({"argumentative", "non_argumentative"})


class ConfigError(ValueError):
    """Raised when a training configuration value is out of contract."""


def default_class_weights() -> dict[str, int]:
    return {"argumentative": 1000, "non_argumentative": 1}


@dataclass(frozen=True)
class TrainingConfig:
    """Knobs for fine-tuning either model.

    ``selection_metric`` picks the dev-set score used for checkpoint
    selection and early stopping: ``"f1"`` (macro F1, classifier) or
    ``"rouge2"`` (mean ROUGE-2 F1, summarizer). ``class_weights`` only
    affects the classifier's cross-entropy loss.
    """

    learning_rate: float = 2e-5
    max_epochs: int = 10
    early_stop_patience: int = 3
    class_weights: Mapping[str, int] = field(default_factory=default_class_weights)
    max_target_words: int = 512
    input_limit_words: int = 1024
    selection_metric: str = "f1"
    batch_size: int = 8
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.learning_rate > 0:
            raise ConfigError(f"learning_rate must be positive, got {self.learning_rate}")
        if self.max_epochs < 1:
            raise ConfigError(f"max_epochs must be at least 1, got {self.max_epochs}")
        if self.early_stop_patience < 0:
            raise ConfigError(
                f"early_stop_patience must be non-negative, got {self.early_stop_patience}"
            )
        if self.input_limit_words not in INPUT_LIMIT_CHOICES:
            raise ConfigError(
                f"input_limit_words must be one of {INPUT_LIMIT_CHOICES}, "
                f"got {self.input_limit_words}"
            )
        if self.max_target_words < 1:
            raise ConfigError(
                f"max_target_words must be at least 1, got {self.max_target_words}"
            )
        if self.selection_metric not in SELECTION_METRICS:
            raise ConfigError(
                f"selection_metric must be one of {SELECTION_METRICS}, "
                f"got {self.selection_metric!r}"
            )
        if self.batch_size < 1:
            raise ConfigError(f"batch_size must be at least 1, got {self.batch_size}")
        if set(self.class_weights) != _WEIGHT_KEYS:
            raise ConfigError(
                f"class_weights keys must be exactly {sorted(_WEIGHT_KEYS)}, "
                f"got {sorted(self.class_weights)}"
            )
        for key, value in self.class_weights.items():
            if not isinstance(value, (int, float)) or isinstance(value, bool) or value <= 0:
                raise ConfigError(f"class weight {key!r} must be a positive number, got {value!r}")

    def to_dict(self) -> dict:
        data = dataclasses.asdict(self)
        data["class_weights"] = dict(self.class_weights)
        return data

    @classmethod
    def from_dict(cls, data: Mapping) -> "TrainingConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config field(s): {', '.join(unknown)}")
        return cls(**dict(data))


def save_config(config: TrainingConfig, path: str | Path) -> None:
    from .data import atomic_write_text

    atomic_write_text(path, json.dumps(config.to_dict(), indent=2, sort_keys=True) + "\n")


def load_config(path: str | Path) -> TrainingConfig:
    with open(path, encoding="utf-8") as handle:
        raw = json.load(handle)
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: config file must hold a JSON object")
    return TrainingConfig.from_dict(raw)


def class_weights_from_stats(path: str | Path) -> dict[str, int]:
    """Lift classifier loss weights out of a corpus statistics report.

    ``path`` points at the ``stats.json`` artifact the pipeline CLI
    writes; its ``class_weights`` entry is used verbatim.
    """
    with open(path, encoding="utf-8") as handle:
        raw = json.load(handle)
    weights = raw.get("class_weights") if isinstance(raw, dict) else None
    if weights is None:
        raise ConfigError(f"{path}: no class_weights entry (corpus had no argumentative sentences?)")
    if set(weights) != _WEIGHT_KEYS:
        raise ConfigError(f"{path}: class_weights keys must be {sorted(_WEIGHT_KEYS)}")
    return {key: int(weights[key]) for key in sorted(weights)}
