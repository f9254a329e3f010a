"""Independent reference implementations used only by the tests."""

import itertools
import math
from fractions import Fraction

from flashback.codec import (
    CLOSE_SENTINEL,
    EMPTY_TOKEN,
    OPEN_SENTINEL,
    SENTINEL_TOKEN,
    BilateralToken,
    TokenSequence,
)


def peel_recursive(s):
    """Literal 1-based transcription of the recursive peel, returning (symbols, split) pairs."""
    w = [None, OPEN_SENTINEL, *s, CLOSE_SENTINEL]  # index 0 unused
    out = []

    def peel(lo, hi):
        if lo >= hi:
            return
        ell = 1
        while lo + ell < hi and w[lo + ell] == w[lo]:
            ell += 1
        if ell == hi - lo:
            out.append((tuple(w[lo:hi]), 0))
            return
        r = hi - 1
        while r > lo and w[r - 1] == w[hi - 1]:
            r -= 1
        sigma = tuple(w[lo : lo + ell]) + tuple(w[r:hi])
        if lo + ell >= r:
            out.append((sigma, 0))
        else:
            out.append((sigma, ell))
            peel(lo + ell, r)

    peel(1, len(w))
    return out


def runs_of(s):
    return [(a, len(list(g))) for a, g in itertools.groupby(s)]


def token_count_of(s):
    return 1 + math.ceil(len(runs_of(s)) / 2) if s else 1


def exact_stats(n, sigma):
    """Exact mean, variance of k and P(kernel is one symbol) by enumerating sigma**n strings."""
    ks = []
    single = 0
    for t in itertools.product(range(sigma), repeat=n):
        r = len(runs_of(t))
        ks.append(1 + math.ceil(r / 2))
        single += r % 2
    total = len(ks)
    mean = Fraction(sum(ks), total)
    var = Fraction(sum(k * k for k in ks), total) - mean**2
    return mean, var, Fraction(single, total)


def well_formed_candidates(alphabet, n):
    """Every sequence with a sentinel head, legal splits and ``n`` content symbols."""
    if n == 0:
        yield TokenSequence.from_tokens([EMPTY_TOKEN])
        return
    for cut in itertools.product((False, True), repeat=n - 1):
        lengths, run = [], 1
        for c in cut:
            if c:
                lengths.append(run)
                run = 1
            else:
                run += 1
        lengths.append(run)
        split_choices = [range(1, L) for L in lengths[:-1]] + [[0]]
        for splits in itertools.product(*split_choices):
            for body in itertools.product(alphabet, repeat=n):
                tokens, pos = [SENTINEL_TOKEN], 0
                for L, p in zip(lengths, splits):
                    tokens.append(BilateralToken(tuple(body[pos : pos + L]), p))
                    pos += L
                yield TokenSequence.from_tokens(tokens)
