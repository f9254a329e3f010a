"""Which token depths an edit touches."""

from dataclasses import dataclass

import numpy as np
from numba import njit

from .codec import as_byte_array, decompose
from .errors import PositionOutOfRangeError, SkeletonMismatchError
from .runs import RunLengthEncoding, rle, run_count, token_count


@dataclass(frozen=True, eq=False)
class RunLengthEdit:
    """Same run symbols as ``base_rle``, new multiplicities."""

    base_rle: RunLengthEncoding
    new_multiplicities: tuple

    @classmethod
    def between(cls, s, t):
        """The edit turning ``s`` into ``t``; both must share run symbols."""
        a, b = rle(s), rle(t)
        if not np.array_equal(a.symbols, b.symbols):
            raise SkeletonMismatchError("run symbols differ")
        return cls(a, tuple(b.lengths.tolist()))

    def edited_rle(self):
        return RunLengthEncoding(
            self.base_rle.symbols, np.asarray(self.new_multiplicities, dtype=np.int64)
        )

    def changed_runs(self):
        """1-based indices of runs whose multiplicity changed."""
        new = np.asarray(self.new_multiplicities)
        return {int(i) + 1 for i in np.flatnonzero(new != self.base_rle.lengths)}


def predict_changed_depths(edit):
    """Depths ``min(i, r + 1 - i)`` for every edited run ``i``."""
    r = edit.base_rle.r
    new = list(edit.new_multiplicities)
    if len(new) != r:
        raise SkeletonMismatchError(f"expected {r} multiplicities, got {len(new)}")
    if any(m < 1 for m in new):
        raise SkeletonMismatchError("multiplicities must be >= 1")
    return frozenset(min(i, r + 1 - i) for i in edit.changed_runs())


@njit(cache=True)
def _differs(sym1, off1, spl1, sym2, off2, spl2, out):
    for d in range(len(out)):
        a1, b1 = off1[d], off1[d + 1]
        a2 = off2[d]
        same = spl1[d] == spl2[d] and b1 - a1 == off2[d + 1] - a2
        j = 0
        while same and j < b1 - a1:
            same = sym1[a1 + j] == sym2[a2 + j]
            j += 1
        out[d] = not same


def diff_tokens(t1, t2):
    """Depths ``d >= 1`` at which the two sequences disagree (a missing token counts)."""
    k1, k2 = len(t1), len(t2)
    common = min(k1, k2)
    out = np.zeros(common, dtype=np.bool_)
    _differs(t1.symbols, t1.offsets, t1.splits, t2.symbols, t2.offsets, t2.splits, out)
    changed = set(np.flatnonzero(out).tolist())
    changed.update(range(common, max(k1, k2)))
    changed.discard(0)
    return frozenset(changed)


@dataclass(frozen=True)
class CharEdit:
    """``kind`` is ``"insert"``, ``"delete"`` or ``"substitute"``; ``byte`` is unused for deletes."""

    kind: str
    position: int
    byte: int = 0

    def apply(self, s):
        s = bytes(s)
        n = len(s)
        if self.kind == "insert":
            if not 0 <= self.position <= n:
                raise PositionOutOfRangeError(f"insert position {self.position} not in [0, {n}]")
            return s[: self.position] + bytes([self.byte]) + s[self.position :]
        if not 0 <= self.position < n:
            raise PositionOutOfRangeError(f"position {self.position} not in [0, {n})")
        if self.kind == "delete":
            return s[: self.position] + s[self.position + 1 :]
        if self.kind == "substitute":
            return s[: self.position] + bytes([self.byte]) + s[self.position + 1 :]
        raise ValueError(f"unknown edit kind {self.kind!r}")


def char_edit_delta_k(s, edit):
    """Change in token count caused by a single character edit."""
    s = bytes(as_byte_array(s))
    t = edit.apply(s)
    r0, r1 = run_count(s), run_count(t)
    k0, k1 = len(decompose(s)), len(decompose(t))
    assert k0 == (token_count(r0) if r0 else 1)
    assert abs(r1 - r0) <= 2, (s, edit, r0, r1)
    assert abs(k1 - k0) <= 1, (s, edit, k0, k1)
    return k1 - k0
