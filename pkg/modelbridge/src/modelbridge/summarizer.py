"""Sequence-to-sequence summarizer over marked inputs.

A small encoder-decoder is trained from scratch on marked input/target
pairs. Inputs are word-truncated at the configured encoder limit (1024
short-context, 6144 long-context) before encoding; marker tokens are
atomic vocabulary units. Checkpoints are selected by mean dev ROUGE-2 F1
with early stopping, and generation is capped at the configured target
length.
"""

from __future__ import annotations

import copy
import json
import logging
from collections import Counter
from pathlib import Path

import torch
from transformers import BartConfig, BartForConditionalGeneration, PreTrainedTokenizerFast

from .config import TrainingConfig, load_config, save_config
from .data import MarkedRecord, read_marked, truncate_words, write_hypotheses
from .loop import EarlyStopper, batched, seed_everything, seeded_order
from .tokenization import build_word_tokenizer, ensure_atomic_markers

logger = logging.getLogger(__name__)

TRAINING_CONFIG_FILE = "training_config.json"
DEV_METRICS_FILE = "dev_metrics.json"

# Dev-time generation budget per epoch; final generation uses the full cap.
_SELECTION_GENERATION_CAP = 64


def rouge2_f1(reference: str, hypothesis: str) -> float:
    """Clipped bigram-overlap F1 over whitespace words (selection metric)."""
    ref_words = reference.split()
    hyp_words = hypothesis.split()
    ref_bigrams = Counter(zip(ref_words, ref_words[1:]))
    hyp_bigrams = Counter(zip(hyp_words, hyp_words[1:]))
    overlap = sum(min(count, ref_bigrams[gram]) for gram, count in hyp_bigrams.items())
    precision = overlap / sum(hyp_bigrams.values()) if hyp_bigrams else 0.0
    recall = overlap / sum(ref_bigrams.values()) if ref_bigrams else 0.0
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def _encode_inputs(
    tokenizer: PreTrainedTokenizerFast,
    texts: list[str],
    limit: int,
) -> dict[str, torch.Tensor]:
    clipped = [truncate_words(text, limit) or tokenizer.unk_token for text in texts]
    return tokenizer(clipped, padding=True, truncation=True, max_length=limit, return_tensors="pt")


def _target_labels(
    tokenizer: PreTrainedTokenizerFast,
    texts: list[str],
    limit: int,
) -> torch.Tensor:
    rows = []
    for text in texts:
        ids = tokenizer(truncate_words(text, limit) or tokenizer.unk_token)["input_ids"]
        rows.append(ids[: limit] + [tokenizer.eos_token_id])
    width = max(len(row) for row in rows)
    padded = [row + [-100] * (width - len(row)) for row in rows]
    return torch.tensor(padded)


def _generate(
    model: BartForConditionalGeneration,
    tokenizer: PreTrainedTokenizerFast,
    texts: list[str],
    input_limit: int,
    max_new_tokens: int,
    batch_size: int,
) -> list[str]:
    model.eval()
    out: list[str] = []
    with torch.no_grad():
        for chunk in batched(texts, batch_size):
            encoded = _encode_inputs(tokenizer, chunk, input_limit)
            generated = model.generate(
                **encoded,
                max_new_tokens=max_new_tokens,
                num_beams=1,
                do_sample=False,
            )
            out.extend(
                " ".join(text.split())
                for text in tokenizer.batch_decode(generated, skip_special_tokens=True)
            )
    return out


def train_summarizer(
    train_path: str | Path,
    dev_path: str | Path,
    config: TrainingConfig,
    out_dir: str | Path,
) -> Path:
    """Fine-tune the summarizer; returns the checkpoint directory."""
    seed_everything(config.seed)
    train_records = read_marked(train_path)
    dev_records = read_marked(dev_path)

    train_inputs = [truncate_words(r.input_text, config.input_limit_words) for r in train_records]
    train_targets = [truncate_words(r.target_text, config.max_target_words) for r in train_records]
    dev_inputs = [r.input_text for r in dev_records]
    dev_targets = [truncate_words(r.target_text, config.max_target_words) for r in dev_records]

    tokenizer = build_word_tokenizer(train_inputs + train_targets)
    ensure_atomic_markers(tokenizer)
    model_config = BartConfig(
        vocab_size=len(tokenizer),
        d_model=32,
        encoder_layers=1,
        decoder_layers=1,
        encoder_attention_heads=2,
        decoder_attention_heads=2,
        encoder_ffn_dim=64,
        decoder_ffn_dim=64,
        max_position_embeddings=config.input_limit_words + 16,
        pad_token_id=tokenizer.pad_token_id,
        bos_token_id=tokenizer.bos_token_id,
        eos_token_id=tokenizer.eos_token_id,
        decoder_start_token_id=tokenizer.bos_token_id,
        forced_eos_token_id=None,
    )
    model = BartForConditionalGeneration(model_config)
    optimizer = torch.optim.AdamW(model.parameters(), lr=config.learning_rate)

    stopper = EarlyStopper(config.early_stop_patience)
    best_state: dict | None = None
    epochs_run = 0
    for epoch in range(1, config.max_epochs + 1):
        epochs_run = epoch
        model.train()
        order = seeded_order(len(train_records), config.seed, epoch)
        for index_chunk in batched(order, config.batch_size):
            inputs = _encode_inputs(
                tokenizer, [train_inputs[i] for i in index_chunk], config.input_limit_words
            )
            labels = _target_labels(
                tokenizer, [train_targets[i] for i in index_chunk], config.max_target_words
            )
            loss = model(**inputs, labels=labels).loss
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()

        generated = _generate(
            model,
            tokenizer,
            dev_inputs,
            config.input_limit_words,
            min(config.max_target_words, _SELECTION_GENERATION_CAP),
            config.batch_size,
        )
        score = sum(rouge2_f1(ref, hyp) for ref, hyp in zip(dev_targets, generated)) / len(dev_targets)
        improved = stopper.observe(score, epoch)
        logger.info("epoch %d dev rouge2 %.4f%s", epoch, score, " *" if improved else "")
        if improved:
            best_state = copy.deepcopy(model.state_dict())
        if stopper.should_stop:
            break

    assert best_state is not None
    model.load_state_dict(best_state)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    model.save_pretrained(out)
    tokenizer.save_pretrained(out)
    save_config(config, out / TRAINING_CONFIG_FILE)
    metrics = {
        "selection_metric": "rouge2",
        "best_epoch": stopper.best_epoch,
        "best_score": stopper.best_score,
        "epochs_run": epochs_run,
    }
    (out / DEV_METRICS_FILE).write_text(json.dumps(metrics, indent=2) + "\n", encoding="utf-8")
    return out


def generate_summaries(
    model_dir: str | Path,
    marked_path: str | Path,
    out_path: str | Path,
    batch_size: int = 8,
) -> Path:
    """Generate one summary per marked input; writes the hypotheses file.

    Each summary is capped at the checkpoint's configured target length
    in words. Marker tokens never appear in the output: they are special
    tokens and are dropped during decoding.
    """
    model_dir = Path(model_dir)
    config = load_config(model_dir / TRAINING_CONFIG_FILE)
    tokenizer = PreTrainedTokenizerFast.from_pretrained(model_dir)
    ensure_atomic_markers(tokenizer)
    model = BartForConditionalGeneration.from_pretrained(model_dir)

    records: list[MarkedRecord] = read_marked(marked_path)
    generated = _generate(
        model,
        tokenizer,
        [record.input_text for record in records],
        config.input_limit_words,
        config.max_target_words,
        batch_size,
    )
    rows = [
        (record.id, " ".join(text.split()[: config.max_target_words]))
        for record, text in zip(records, generated)
    ]
    write_hypotheses(rows, out_path)
    return Path(out_path)
