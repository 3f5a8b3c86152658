"""Sentence-level argument-role classifier.

A small transformer encoder is trained from scratch over the corpus
vocabulary for 4-way role classification. Argumentative sentences are
rare, so the cross-entropy loss is weighted per class; checkpoints are
selected by dev macro F1 with early stopping.
"""

from __future__ import annotations

import copy
import json
import logging
from pathlib import Path

import torch
from torch import nn
from transformers import BertConfig, BertForSequenceClassification, PreTrainedTokenizerFast

from .config import TrainingConfig, load_config, save_config
from .data import ROLE_NAMES, Case, read_corpus, truncate_words, write_predictions
from .loop import EarlyStopper, batched, seed_everything, seeded_order
from .tokenization import build_word_tokenizer

logger = logging.getLogger(__name__)

LABELS = ROLE_NAMES
_LABEL_TO_ID = {name: idx for idx, name in enumerate(LABELS)}
_ARGUMENTATIVE_IDS = frozenset({_LABEL_TO_ID["issue"], _LABEL_TO_ID["reason"], _LABEL_TO_ID["conclusion"]})

TRAINING_CONFIG_FILE = "training_config.json"
DEV_REPORT_FILE = "dev_report.json"


class LabelSetMismatch(ValueError):
    """Raised when a checkpoint's label set differs from the role taxonomy."""


def _sentence_rows(cases: list[Case]) -> list[tuple[str, int]]:
    return [(text, _LABEL_TO_ID[role]) for case in cases for text, role in case.doc]


def _prf(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def classification_report_dict(gold: list[int], predicted: list[int]) -> dict:
    """Per-class precision/recall/F1 plus macro and binary summaries."""
    per_class: dict[str, dict] = {}
    f1_values: list[float] = []
    absent: list[str] = []
    for idx, name in enumerate(LABELS):
        tp = sum(1 for g, p in zip(gold, predicted) if g == idx and p == idx)
        fp = sum(1 for g, p in zip(gold, predicted) if g != idx and p == idx)
        fn = sum(1 for g, p in zip(gold, predicted) if g == idx and p != idx)
        support = sum(1 for g in gold if g == idx)
        precision, recall, f1 = _prf(tp, fp, fn)
        per_class[name] = {"precision": precision, "recall": recall, "f1": f1, "support": support}
        f1_values.append(f1)
        if support == 0 and tp + fp == 0:
            absent.append(name)
    bin_tp = sum(1 for g, p in zip(gold, predicted) if g in _ARGUMENTATIVE_IDS and p in _ARGUMENTATIVE_IDS)
    bin_fp = sum(1 for g, p in zip(gold, predicted) if g not in _ARGUMENTATIVE_IDS and p in _ARGUMENTATIVE_IDS)
    bin_fn = sum(1 for g, p in zip(gold, predicted) if g in _ARGUMENTATIVE_IDS and p not in _ARGUMENTATIVE_IDS)
    _, _, binary_f1 = _prf(bin_tp, bin_fp, bin_fn)
    return {
        "per_class": per_class,
        "macro_f1": sum(f1_values) / len(f1_values),
        "binary_f1": binary_f1,
        "labels": list(LABELS),
        "absent_labels": absent,
    }


def _encode(
    tokenizer: PreTrainedTokenizerFast,
    texts: list[str],
    limit: int,
) -> dict[str, torch.Tensor]:
    # A blank sentence still needs one token for attention to be defined.
    clipped = [truncate_words(text, limit) or tokenizer.unk_token for text in texts]
    return tokenizer(
        clipped,
        padding=True,
        truncation=True,
        max_length=limit,
        return_tensors="pt",
    )


def _predict_ids(
    model: BertForSequenceClassification,
    tokenizer: PreTrainedTokenizerFast,
    texts: list[str],
    limit: int,
    batch_size: int,
) -> list[int]:
    model.eval()
    out: list[int] = []
    with torch.no_grad():
        for chunk in batched(texts, batch_size):
            encoded = _encode(tokenizer, chunk, limit)
            logits = model(**encoded).logits
            out.extend(logits.argmax(dim=-1).tolist())
    return out


def train_classifier(
    train_path: str | Path,
    dev_path: str | Path,
    config: TrainingConfig,
    out_dir: str | Path,
) -> Path:
    """Fine-tune the role classifier; returns the checkpoint directory.

    The directory holds the best-by-dev-F1 model weights, the induced
    tokenizer, the resolved training configuration, and the dev
    classification report of the selected epoch.
    """
    seed_everything(config.seed)
    train_cases = read_corpus(train_path)
    dev_cases = read_corpus(dev_path)
    train_rows = _sentence_rows(train_cases)
    dev_rows = _sentence_rows(dev_cases)
    dev_texts = [text for text, _ in dev_rows]
    dev_gold = [label for _, label in dev_rows]

    tokenizer = build_word_tokenizer(text for text, _ in train_rows)
    model_config = BertConfig(
        vocab_size=len(tokenizer),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=config.input_limit_words + 8,
        num_labels=len(LABELS),
        id2label={idx: name for idx, name in enumerate(LABELS)},
        label2id=dict(_LABEL_TO_ID),
        pad_token_id=tokenizer.pad_token_id,
    )
    model = BertForSequenceClassification(model_config)

    weight = torch.tensor(
        [float(config.class_weights["argumentative"])] * 3
        + [float(config.class_weights["non_argumentative"])]
    )
    loss_fn = nn.CrossEntropyLoss(weight=weight)
    optimizer = torch.optim.AdamW(model.parameters(), lr=config.learning_rate)

    stopper = EarlyStopper(config.early_stop_patience)
    best_state: dict | None = None
    best_report: dict | None = None
    epochs_run = 0
    for epoch in range(1, config.max_epochs + 1):
        epochs_run = epoch
        model.train()
        order = seeded_order(len(train_rows), config.seed, epoch)
        for index_chunk in batched(order, config.batch_size):
            texts = [train_rows[i][0] for i in index_chunk]
            labels = torch.tensor([train_rows[i][1] for i in index_chunk])
            encoded = _encode(tokenizer, texts, config.input_limit_words)
            logits = model(**encoded).logits
            loss = loss_fn(logits, labels)
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()

        dev_pred = _predict_ids(model, tokenizer, dev_texts, config.input_limit_words, config.batch_size)
        report = classification_report_dict(dev_gold, dev_pred)
        improved = stopper.observe(report["macro_f1"], epoch)
        logger.info("epoch %d dev macro F1 %.4f%s", epoch, report["macro_f1"], " *" if improved else "")
        if improved:
            best_state = copy.deepcopy(model.state_dict())
            best_report = report
        if stopper.should_stop:
            break

    assert best_state is not None and best_report is not None
    model.load_state_dict(best_state)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    model.save_pretrained(out)
    tokenizer.save_pretrained(out)
    save_config(config, out / TRAINING_CONFIG_FILE)
    dev_report = dict(best_report)
    dev_report["best_epoch"] = stopper.best_epoch
    dev_report["epochs_run"] = epochs_run
    (out / DEV_REPORT_FILE).write_text(json.dumps(dev_report, indent=2) + "\n", encoding="utf-8")
    return out


def predict_roles(
    model_dir: str | Path,
    corpus_path: str | Path,
    out_path: str | Path,
    batch_size: int = 32,
) -> Path:
    """Label every document sentence; writes the predictions file.

    Output is one JSON object per case, ``{"id", "roles"}``, with one
    role per document sentence in order.
    """
    model_dir = Path(model_dir)
    tokenizer = PreTrainedTokenizerFast.from_pretrained(model_dir)
    model = BertForSequenceClassification.from_pretrained(model_dir)
    id2label = {int(key): value for key, value in model.config.id2label.items()}
    expected = {idx: name for idx, name in enumerate(LABELS)}
    if id2label != expected:
        raise LabelSetMismatch(
            f"checkpoint labels {sorted(id2label.items())} do not match {sorted(expected.items())}"
        )
    limit = load_config(model_dir / TRAINING_CONFIG_FILE).input_limit_words

    cases = read_corpus(corpus_path)
    flat_texts = [text for case in cases for text, _ in case.doc]
    flat_ids = _predict_ids(model, tokenizer, flat_texts, limit, batch_size)

    rows: list[tuple[str, list[str]]] = []
    cursor = 0
    for case in cases:
        take = flat_ids[cursor : cursor + len(case.doc)]
        cursor += len(case.doc)
        rows.append((case.id, [id2label[i] for i in take]))
    write_predictions(rows, out_path)
    return Path(out_path)
