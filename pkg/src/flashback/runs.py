"""
Run-level view of the decomposition.

Peeling pairs run ``j`` with run ``r + 1 - j`` (1-based), so the whole token
sequence can be predicted from the run-length encoding without running the
peeler.  This module builds that prediction plus the laws that follow from
it: kernel shape, palindrome test, reversal, dilation and tandem powers.
"""

from dataclasses import dataclass

import numpy as np

from .codec import (
    CLOSE_SENTINEL,
    OPEN_SENTINEL,
    SYMBOL_DTYPE,
    BilateralToken,
    TokenSequence,
    as_byte_array,
    reconstruct,
)
from .errors import EmptyInputError, NotInImageError
from . import image


@dataclass(frozen=True)
class Run:
    symbol: int
    multiplicity: int


@dataclass(frozen=True, eq=False)
class RunLengthEncoding:
    """Maximal-run factorization ``a_1^m_1 ... a_r^m_r`` with ``a_i != a_(i+1)``."""

    symbols: np.ndarray
    lengths: np.ndarray

    def __post_init__(self):
        if len(self.symbols) != len(self.lengths):
            raise ValueError("symbols and lengths differ in length")
        if np.any(self.lengths < 1):
            raise ValueError("run multiplicities must be >= 1")
        if np.any(self.symbols[1:] == self.symbols[:-1]):
            raise ValueError("adjacent runs must have distinct symbols")

    @classmethod
    def from_runs(cls, runs):
        runs = [r if isinstance(r, Run) else Run(*r) for r in runs]
        return cls(
            np.array([r.symbol for r in runs], dtype=SYMBOL_DTYPE),
            np.array([r.multiplicity for r in runs], dtype=np.int64),
        )

    @property
    def r(self):
        return len(self.lengths)

    @property
    def runs(self):
        return [Run(int(a), int(m)) for a, m in zip(self.symbols, self.lengths)]

    def expand(self):
        return np.repeat(self.symbols, self.lengths).astype(np.uint8).tobytes()

    def __eq__(self, other):
        if not isinstance(other, RunLengthEncoding):
            return NotImplemented
        return np.array_equal(self.symbols, other.symbols) and np.array_equal(
            self.lengths, other.lengths
        )

    __hash__ = None

    def __repr__(self):
        return "RunLengthEncoding(" + " ".join(f"{chr(a)!r}^{m}" for a, m in zip(
            self.symbols.tolist(), self.lengths.tolist())) + ")"


@dataclass(frozen=True)
class Kernel:
    symbols: bytes
    distinct_symbol_count: int


def _nonempty(s):
    data = as_byte_array(s)
    if len(data) == 0:
        raise EmptyInputError("run structure is undefined for the empty string")
    return data


def run_count(s):
    """Number of maximal runs; 0 for the empty string."""
    data = as_byte_array(s)
    if len(data) == 0:
        return 0
    return int(np.count_nonzero(data[1:] != data[:-1])) + 1


def rle(s):
    data = _nonempty(s)
    starts = np.concatenate(([0], np.flatnonzero(data[1:] != data[:-1]) + 1))
    lengths = np.diff(np.append(starts, len(data)))
    return RunLengthEncoding(data[starts].astype(SYMBOL_DTYPE), lengths.astype(np.int64))


def token_count(r):
    """Token count ``1 + ceil(r / 2)`` of a string with ``r`` runs."""
    if r < 1:
        raise ValueError("need at least one run")
    return 1 + (r + 1) // 2


def _pairing_order(r):
    # 0-based run indices in token order: (0, r-1), (1, r-2), ..., then the middle.
    h = (r + 1) // 2
    left = np.arange(h - 1)
    order = np.column_stack((left, r - 1 - left)).ravel()
    middle = [h - 1] if r % 2 else [h - 1, h]
    return np.concatenate((order, middle)).astype(np.int64), h


def predict_tokens(encoding):
    """Token sequence implied by run pairing, without peeling anything."""
    r = encoding.r
    if r < 1:
        raise EmptyInputError("empty run-length encoding")
    order, h = _pairing_order(r)
    run_lengths = encoding.lengths[order]
    body = np.repeat(encoding.symbols[order], run_lengths)
    symbols = np.concatenate(([OPEN_SENTINEL, CLOSE_SENTINEL], body)).astype(SYMBOL_DTYPE)

    pairs = run_lengths[: 2 * (h - 1)].reshape(-1, 2)
    token_lengths = np.concatenate(([2], pairs.sum(axis=1), [run_lengths[2 * (h - 1):].sum()]))
    offsets = np.zeros(len(token_lengths) + 1, dtype=np.int64)
    np.cumsum(token_lengths, out=offsets[1:])
    splits = np.concatenate(([1], pairs[:, 0], [0]))
    return TokenSequence(symbols, offsets, splits)


def kernel(s):
    """Middle run (odd ``r``) or two middle runs (even ``r``)."""
    enc = rle(s)
    h = (enc.r + 1) // 2
    idx = slice(h - 1, h) if enc.r % 2 else slice(h - 1, h + 1)
    sub = RunLengthEncoding(enc.symbols[idx], enc.lengths[idx])
    return Kernel(sub.expand(), sub.r)


def is_palindrome_by_rle(s):
    enc = rle(s)
    if enc.r % 2 == 0:
        return False
    return bool(
        np.array_equal(enc.symbols, enc.symbols[::-1])
        and np.array_equal(enc.lengths, enc.lengths[::-1])
    )


def _require_image(tokens):
    report = image.validate(tokens)
    if not report.valid:
        raise NotInImageError(report.summary())


def reverse_tokens(tokens):
    """Token sequence of the reversed string, computed token by token."""
    _require_image(tokens)
    out = [tokens[0]]
    for tok in tokens[1:]:
        if tok.is_terminal:
            out.append(BilateralToken(tok.symbols[::-1], 0))
        else:
            out.append(BilateralToken(tok.back + tok.front, len(tok.back)))
    return TokenSequence.from_tokens(out)


def dilate_tokens(tokens, c):
    """Token sequence of ``s`` with every byte repeated ``c`` times."""
    if c < 1:
        raise ValueError("dilation factor must be >= 1")
    _require_image(tokens)
    if len(tokens) == 1:
        return tokens
    head = tokens.offsets[1]
    lengths = tokens.lengths.copy()
    lengths[1:] *= c
    offsets = np.zeros(len(lengths) + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])
    symbols = np.concatenate((tokens.symbols[:head], np.repeat(tokens.symbols[head:], c)))
    splits = tokens.splits.copy()
    splits[1:] *= c
    return TokenSequence(symbols, offsets, splits)


def tandem_token_period(tokens, w_runs):
    """Check the period-``w_runs`` structure expected of ``F(w^m)`` with ``r(w) = w_runs``.

    False when the encoded string's runs are not ``w_runs``-periodic (so it
    cannot be such a tandem power); otherwise whether non-terminal content
    tokens at depths ``j`` and ``j + w_runs`` agree wherever both exist.
    """
    if w_runs < 1:
        raise ValueError("w_runs must be positive")
    s = reconstruct(tokens)
    if not s:
        return False
    enc = rle(s)
    if enc.r % w_runs:
        return False
    periodic = (
        np.array_equal(enc.symbols[w_runs:], enc.symbols[:-w_runs])
        and np.array_equal(enc.lengths[w_runs:], enc.lengths[:-w_runs])
    )
    if not periodic:
        return False
    content = tokens[1:-1]
    return all(content[j] == content[j + w_runs] for j in range(len(content) - w_runs))
