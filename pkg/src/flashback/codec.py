"""
Bilateral run-peeling decomposition and its inverse.

The input is wrapped as ``@ s $`` and the maximal leading and trailing runs
of the active span are peeled together, one token per depth, until the
middle is empty.  Symbols are integers: ordinary bytes are 0..255 and the
two sentinels live out of band at 256 (``@``) and 257 (``$``), so every
byte string is a legal input.

A :class:`TokenSequence` is stored column-wise (one flat symbol array plus
offsets and splits) so that multi-megabyte inputs, which produce tens of
millions of tokens, stay cheap.
"""

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import MalformedSequenceError

OPEN_SENTINEL = 256
CLOSE_SENTINEL = 257

SYMBOL_DTYPE = np.int16

_SENTINEL_GLYPHS = {OPEN_SENTINEL: "@", CLOSE_SENTINEL: "$"}


def is_sentinel(symbol):
    return symbol >= OPEN_SENTINEL


def symbol_kind(symbol):
    """Return ``"OPEN_SENTINEL"``, ``"CLOSE_SENTINEL"`` or ``"BYTE"``."""
    if symbol == OPEN_SENTINEL:
        return "OPEN_SENTINEL"
    if symbol == CLOSE_SENTINEL:
        return "CLOSE_SENTINEL"
    if 0 <= symbol <= 255:
        return "BYTE"
    raise ValueError(f"not a symbol: {symbol!r}")


def as_byte_array(s):
    """View a bytes-like object (or uint8 array) as a 1-d uint8 array."""
    if isinstance(s, np.ndarray):
        if s.dtype != np.uint8 or s.ndim != 1:
            raise TypeError("expected a 1-d uint8 array")
        return s
    if isinstance(s, str):
        raise TypeError("expected bytes, not str")
    return np.frombuffer(memoryview(s).cast("B"), dtype=np.uint8)


@dataclass(frozen=True)
class BilateralToken:
    """A peeled front run and back run, ``symbols[:split]`` and ``symbols[split:]``.

    ``split == 0`` marks the terminal token, whose symbols are the whole
    remaining span.
    """

    symbols: tuple
    split: int

    def __post_init__(self):
        if len(self.symbols) < 1:
            raise ValueError("token symbols must be non-empty")
        if not 0 <= self.split <= len(self.symbols):
            raise ValueError(f"split {self.split} outside [0, {len(self.symbols)}]")

    @classmethod
    def from_bytes(cls, data, split):
        return cls(tuple(bytes(data)), split)

    @property
    def is_terminal(self):
        return self.split == 0

    @property
    def front(self):
        return self.symbols[: self.split]

    @property
    def back(self):
        return self.symbols[self.split :]

    def __str__(self):
        text = "".join(
            _SENTINEL_GLYPHS.get(c) or (chr(c) if 0x20 < c < 0x7F else f"\\x{c:02X}")
            for c in self.symbols
        )
        return f"{text}_{self.split}"


SENTINEL_TOKEN = BilateralToken((OPEN_SENTINEL, CLOSE_SENTINEL), 1)
EMPTY_TOKEN = BilateralToken((OPEN_SENTINEL, CLOSE_SENTINEL), 0)


class TokenSequence:
    """Ordered bilateral tokens, stored as flat arrays.

    ``symbols[offsets[d]:offsets[d + 1]]`` are the symbols of token ``d`` and
    ``splits[d]`` its split position.
    """

    __slots__ = ("symbols", "offsets", "splits")

    def __init__(self, symbols, offsets, splits):
        symbols = np.asarray(symbols, dtype=SYMBOL_DTYPE)
        offsets = np.asarray(offsets, dtype=np.int64)
        splits = np.asarray(splits, dtype=np.int64)
        if offsets.ndim != 1 or len(offsets) != len(splits) + 1:
            raise ValueError("need exactly one more offset than splits")
        if offsets[0] != 0 or offsets[-1] != len(symbols):
            raise ValueError("offsets must span the symbol array")
        if np.any(np.diff(offsets) < 0):
            raise ValueError("offsets must be non-decreasing")
        self.symbols = symbols
        self.offsets = offsets
        self.splits = splits

    @classmethod
    def from_tokens(cls, tokens):
        tokens = list(tokens)
        lengths = [len(t.symbols) for t in tokens]
        offsets = np.zeros(len(tokens) + 1, dtype=np.int64)
        np.cumsum(lengths, out=offsets[1:])
        symbols = np.fromiter(
            (c for t in tokens for c in t.symbols), dtype=SYMBOL_DTYPE, count=int(offsets[-1])
        )
        return cls(symbols, offsets, [t.split for t in tokens])

    @property
    def k(self):
        return len(self.splits)

    @property
    def lengths(self):
        return np.diff(self.offsets)

    def __len__(self):
        return len(self.splits)

    def __getitem__(self, d):
        if isinstance(d, slice):
            return [self[i] for i in range(*d.indices(len(self)))]
        if d < 0:
            d += len(self)
        if not 0 <= d < len(self):
            raise IndexError(d)
        a, b = self.offsets[d], self.offsets[d + 1]
        return BilateralToken(tuple(self.symbols[a:b].tolist()), int(self.splits[d]))

    def __iter__(self):
        for d in range(len(self)):
            yield self[d]

    def __eq__(self, other):
        if isinstance(other, (list, tuple)):
            return list(self) == list(other)
        if not isinstance(other, TokenSequence):
            return NotImplemented
        return (
            np.array_equal(self.splits, other.splits)
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.symbols, other.symbols)
        )

    __hash__ = None

    def __repr__(self):
        if len(self) > 12:
            body = ", ".join(str(t) for t in self[:6]) + f", ... ({len(self)} tokens)"
        else:
            body = ", ".join(str(t) for t in self)
        return f"TokenSequence([{body}])"


def wrap(s):
    """Return ``@ s $`` as a symbol array."""
    data = as_byte_array(s)
    wrapped = np.empty(len(data) + 2, dtype=SYMBOL_DTYPE)
    wrapped[0] = OPEN_SENTINEL
    wrapped[1:-1] = data
    wrapped[-1] = CLOSE_SENTINEL
    return wrapped


@njit(cache=True)
def _peel(wrapped, out, offsets, splits):
    # Tail recursion of the peel step unrolled; [lo, hi) is the active span.
    lo = 0
    hi = len(wrapped)
    k = 0
    pos = 0
    while lo < hi:
        ell = 1
        while lo + ell < hi and wrapped[lo + ell] == wrapped[lo]:
            ell += 1
        if ell == hi - lo:
            out[pos : pos + ell] = wrapped[lo:hi]
            pos += ell
            splits[k] = 0
            k += 1
            offsets[k] = pos
            break
        r = hi - 1
        while r > lo and wrapped[r - 1] == wrapped[hi - 1]:
            r -= 1
        out[pos : pos + ell] = wrapped[lo : lo + ell]
        pos += ell
        out[pos : pos + hi - r] = wrapped[r:hi]
        pos += hi - r
        k += 1
        offsets[k] = pos
        if lo + ell >= r:
            splits[k - 1] = 0
            break
        splits[k - 1] = ell
        lo, hi = lo + ell, r
    return k


@njit(cache=True)
def _nest(symbols, offsets, splits, out):
    # Fronts fill from the left, backs from the right, innermost in the gap.
    left = 0
    right = len(out)
    k = len(splits)
    for i in range(k - 1):
        a = offsets[i]
        b = offsets[i + 1]
        p = splits[i]
        out[left : left + p] = symbols[a : a + p]
        left += p
        back = b - a - p
        out[right - back : right] = symbols[a + p : b]
        right -= back
    a = offsets[k - 1]
    b = offsets[k]
    out[left : left + b - a] = symbols[a:b]


def decompose(s):
    """Decompose a byte string into its token sequence.

    >>> [str(t) for t in decompose(b"CASSAYFF")]
    ['@$_1', 'CFF_1', 'AY_1', 'SSA_0']
    """
    wrapped = wrap(s)
    n2 = len(wrapped)
    out = np.empty(n2, dtype=SYMBOL_DTYPE)
    # Every non-terminal token consumes at least two symbols.
    cap = n2 // 2 + 1
    offsets = np.zeros(cap + 1, dtype=np.int64)
    splits = np.zeros(cap, dtype=np.int64)
    k = _peel(wrapped, out, offsets, splits)
    del wrapped
    return TokenSequence(out, offsets[: k + 1].copy(), splits[:k].copy())


def decompose_iterative(s):
    """Loop form of :func:`decompose` on plain Python sequences.

    Auxiliary state is the span ``[lo, hi)`` plus the two run scans; the
    result is identical to :func:`decompose` for every input.
    """
    w = [OPEN_SENTINEL, *bytes(s), CLOSE_SENTINEL]
    tokens = []
    lo, hi = 0, len(w)
    while lo < hi:
        ell = 1
        while lo + ell < hi and w[lo + ell] == w[lo]:
            ell += 1
        if ell == hi - lo:
            tokens.append(BilateralToken(tuple(w[lo:hi]), 0))
            break
        r = hi - 1
        while r > lo and w[r - 1] == w[hi - 1]:
            r -= 1
        sigma = tuple(w[lo : lo + ell]) + tuple(w[r:hi])
        mid_lo, mid_hi = lo + ell, r
        if mid_lo >= mid_hi:
            tokens.append(BilateralToken(sigma, 0))
            break
        tokens.append(BilateralToken(sigma, ell))
        lo, hi = mid_lo, mid_hi
    return TokenSequence.from_tokens(tokens)


def check_structure(tokens):
    """Raise :class:`MalformedSequenceError` unless ``tokens`` can be nested."""
    k = len(tokens)
    if k == 0:
        raise MalformedSequenceError("empty token sequence")
    lengths = tokens.lengths
    splits = tokens.splits
    symbols = tokens.symbols
    if np.any(lengths < 1):
        d = int(np.flatnonzero(lengths < 1)[0])
        raise MalformedSequenceError(f"token {d} has no symbols")
    if splits[-1] != 0:
        raise MalformedSequenceError("last token is not terminal")
    inner = splits[:-1]
    bad = np.flatnonzero((inner < 1) | (inner >= lengths[:-1]))
    if len(bad):
        d = int(bad[0])
        if inner[d] == 0:
            raise MalformedSequenceError(f"terminal token at depth {d} before the last position")
        raise MalformedSequenceError(f"token {d}: split {inner[d]} leaves an empty front or back")
    head = symbols[: tokens.offsets[1]]
    if len(head) != 2 or head[0] != OPEN_SENTINEL or head[1] != CLOSE_SENTINEL:
        raise MalformedSequenceError("first token is not the sentinel pair")
    if np.any(symbols[tokens.offsets[1] :] >= OPEN_SENTINEL):
        raise MalformedSequenceError("sentinel outside the first token")


def reconstruct(tokens):
    """Rebuild the byte string that ``tokens`` encodes.

    Each token is ``front || inner || back``, the last one verbatim; the
    surrounding sentinels are stripped.  Structural violations raise
    :class:`MalformedSequenceError`; full image membership is checked by
    :func:`flashback.image.validate`.
    """
    check_structure(tokens)
    out = np.empty(int(tokens.offsets[-1]), dtype=SYMBOL_DTYPE)
    _nest(tokens.symbols, tokens.offsets, tokens.splits, out)
    return out[1:-1].astype(np.uint8).tobytes()
