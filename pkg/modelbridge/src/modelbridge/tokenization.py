"""Word-level tokenizer construction with atomic marker tokens.

Both models are trained from scratch at toy scale, so the vocabulary is
induced from the training text itself. Marker tokens are registered as
additional special tokens so they can never fragment: a marked input
tokenizes to exactly one token per marker, and generation can strip them
cleanly via ``skip_special_tokens``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from tokenizers import Tokenizer
from tokenizers.models import WordLevel
from tokenizers.pre_tokenizers import WhitespaceSplit
from tokenizers.trainers import WordLevelTrainer
from transformers import PreTrainedTokenizerFast

MARKER_TOKENS = (
    "<IRC>",
    "</IRC>",
    "<Issue>",
    "</Issue>",
    "<Reason>",
    "</Reason>",
    "<Conclusion>",
    "</Conclusion>",
)

# Order fixes the ids: [UNK]=0, [PAD]=1, [CLS]=2, [SEP]=3, [BOS]=4, [EOS]=5.
BASE_SPECIAL_TOKENS = ("[UNK]", "[PAD]", "[CLS]", "[SEP]", "[BOS]", "[EOS]")


class VocabularyError(ValueError):
    """Raised when marker tokens are not atomic units of the vocabulary."""

    def __init__(self, tokens: Sequence[str]):
        self.tokens = tuple(tokens)
        listing = ", ".join(repr(token) for token in self.tokens)
        super().__init__(f"marker token(s) not atomic in the vocabulary: {listing}")


def build_word_tokenizer(
    texts: Iterable[str],
    markers: Sequence[str] = MARKER_TOKENS,
    vocab_size: int = 30000,
) -> PreTrainedTokenizerFast:
    """Induce a whitespace word-level vocabulary over ``texts``."""
    tokenizer = Tokenizer(WordLevel(unk_token="[UNK]"))
    tokenizer.pre_tokenizer = WhitespaceSplit()
    trainer = WordLevelTrainer(
        vocab_size=vocab_size,
        min_frequency=1,
        special_tokens=list(BASE_SPECIAL_TOKENS),
    )
    tokenizer.train_from_iterator(texts, trainer)
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tokenizer,
        unk_token="[UNK]",
        pad_token="[PAD]",
        cls_token="[CLS]",
        sep_token="[SEP]",
        bos_token="[BOS]",
        eos_token="[EOS]",
    )
    if markers:
        fast.add_special_tokens({"additional_special_tokens": list(markers)})
        ensure_atomic_markers(fast, markers)
    return fast


def ensure_atomic_markers(
    tokenizer: PreTrainedTokenizerFast,
    markers: Sequence[str] = MARKER_TOKENS,
) -> None:
    """Check every marker tokenizes to itself as a single unit."""
    broken = [marker for marker in markers if tokenizer.tokenize(marker) != [marker]]
    if broken:
        raise VocabularyError(broken)
