"""Bilateral run-peeling decomposition of byte strings."""

from .codec import (
    CLOSE_SENTINEL,
    OPEN_SENTINEL,
    BilateralToken,
    TokenSequence,
    decompose,
    decompose_iterative,
    reconstruct,
)
from .errors import FlashbackError
from .image import reassemble, validate
from .runs import kernel, predict_tokens, rle, token_count

__all__ = [
    "CLOSE_SENTINEL",
    "OPEN_SENTINEL",
    "BilateralToken",
    "FlashbackError",
    "TokenSequence",
    "decompose",
    "decompose_iterative",
    "kernel",
    "predict_tokens",
    "reassemble",
    "reconstruct",
    "rle",
    "token_count",
    "validate",
]
