"""Small shared pieces of the two training loops."""

from __future__ import annotations

import random
from typing import Iterator, Sequence, TypeVar

import torch

T = TypeVar("T")


class EarlyStopper:
    """Track the best dev score and call the stop after a patience run.

    ``observe`` returns True when the score improves on the best seen so
    far (strict improvement). ``should_stop`` becomes True once the
    number of consecutive non-improving epochs reaches ``patience``, so
    patience 3 with a best at epoch 1 stops training at epoch 4; patience
    0 stops at the first epoch that fails to improve.
    """

    def __init__(self, patience: int):
        if patience < 0:
            raise ValueError(f"patience must be non-negative, got {patience}")
        self.patience = patience
        self.best_score: float | None = None
        self.best_epoch: int | None = None
        self.stale_epochs = 0

    def observe(self, score: float, epoch: int) -> bool:
        if self.best_score is None or score > self.best_score:
            self.best_score = score
            self.best_epoch = epoch
            self.stale_epochs = 0
            return True
        self.stale_epochs += 1
        return False

    @property
    def should_stop(self) -> bool:
        return self.stale_epochs > 0 and self.stale_epochs >= self.patience


def seeded_order(count: int, seed: int, epoch: int) -> list[int]:
    """Deterministic per-epoch shuffle of example indices."""
    order = list(range(count))
    random.Random(seed * 1_000_003 + epoch).shuffle(order)
    return order


def batched(items: Sequence[T], size: int) -> Iterator[list[T]]:
    for start in range(0, len(items), size):
        yield list(items[start : start + size])


def seed_everything(seed: int) -> None:
    random.seed(seed)
    torch.manual_seed(seed)
