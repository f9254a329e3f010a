"""
Exhaustive search over admissible bilateral run-peelings.

An admissible peeling removes any ``x`` in ``1..L`` symbols from the
leading run and any ``y`` in ``1..R`` from the trailing run of the active
span, and stops with one terminal token once the span is a single run or
two adjacent runs.  Maximal peeling (``x = L``, ``y = R``) is one branch.
The search is brute force and meant for short strings only.
"""

from dataclasses import dataclass

from .codec import BilateralToken, as_byte_array, decompose
from .errors import EmptyInputError, SearchTooLargeError
from .runs import run_count

DEFAULT_LIMIT = 10**6


@dataclass(frozen=True)
class PeelingState:
    lo: int
    hi: int
    content_tokens_emitted: int
    runs_intersected: int


@dataclass(frozen=True)
class AdmissibleDecomposition:
    """Tokens over the bare string, no sentinel token; the last is terminal."""

    tokens: tuple
    choices: tuple

    @property
    def content_count(self):
        return len(self.tokens)

    def replay(self):
        """Nest the tokens back into the string they were peeled from."""
        out = bytes(self.tokens[-1].symbols)
        for tok in reversed(self.tokens[:-1]):
            out = bytes(tok.front) + out + bytes(tok.back)
        return out


def _span_runs(data, lo, hi):
    """Leading run length, trailing run length and a <=2-runs flag for ``data[lo:hi]``."""
    lead = 1
    while lo + lead < hi and data[lo + lead] == data[lo]:
        lead += 1
    if lead == hi - lo:
        return lead, lead, True
    trail = 1
    while hi - trail - 1 >= lo and data[hi - trail - 1] == data[hi - 1]:
        trail += 1
    return lead, trail, lead + trail == hi - lo


def enumerate_peelings(s, limit=DEFAULT_LIMIT):
    """Every admissible decomposition of ``s``, depth-first over ``(x, y)`` choices.

    ``limit`` caps the number of search nodes visited; exceeding it raises
    :class:`SearchTooLargeError`.
    """
    data = bytes(as_byte_array(s))
    n = len(data)
    if n == 0:
        raise EmptyInputError("cannot peel the empty string")

    # original run index of each position, for the runs-intersected potential
    run_id = [0] * n
    for i in range(1, n):
        run_id[i] = run_id[i - 1] + (data[i] != data[i - 1])

    results = []
    visited = 0
    path = []

    def visit(state):
        nonlocal visited
        visited += 1
        if visited > limit:
            raise SearchTooLargeError(f"search exceeded {limit} nodes")
        lo, hi = state.lo, state.hi
        lead, trail, terminal = _span_runs(data, lo, hi)
        if terminal:
            assert state.runs_intersected <= 2, state
            tokens = tuple(
                BilateralToken(tuple(data[a : a + x] + data[b - y : b]), x) for a, b, x, y in path
            ) + (BilateralToken(tuple(data[lo:hi]), 0),)
            results.append(AdmissibleDecomposition(tokens, tuple((x, y) for _, _, x, y in path)))
            return
        for x in range(1, lead + 1):
            for y in range(1, trail + 1):
                nlo, nhi = lo + x, hi - y
                runs = run_id[nhi - 1] - run_id[nlo] + 1
                assert state.runs_intersected - runs <= 2, (state, x, y)
                path.append((lo, hi, x, y))
                visit(PeelingState(nlo, nhi, state.content_tokens_emitted + 1, runs))
                path.pop()

    visit(PeelingState(0, n, 0, run_id[-1] + 1))
    return results


def minimal_peelings(s, limit=DEFAULT_LIMIT):
    found = enumerate_peelings(s, limit)
    best = min(d.content_count for d in found)
    return [d for d in found if d.content_count == best]


def min_content_tokens(s, limit=DEFAULT_LIMIT):
    return min(d.content_count for d in enumerate_peelings(s, limit))


def count_minimal(s, limit=DEFAULT_LIMIT):
    return len(minimal_peelings(s, limit))


def flashback_peeling(s):
    """The maximal-peel decomposition, in the search's sentinel-free form."""
    return tuple(decompose(s)[1:])


def check_optimality(s, limit=DEFAULT_LIMIT):
    """Verify the ceil(r/2) lower bound and even-run uniqueness on one string.

    Returns a list of failure messages; empty when every claim holds.
    """
    found = enumerate_peelings(s, limit)
    r = run_count(s)
    bound = (r + 1) // 2
    flash = flashback_peeling(s)
    failures = []
    best = min(d.content_count for d in found)
    minimal = [d for d in found if d.content_count == best]
    if best != bound:
        failures.append(f"{s!r}: minimum {best} != ceil(r/2) = {bound}")
    if not any(d.tokens == flash for d in minimal):
        failures.append(f"{s!r}: maximal peeling is not a minimizer")
    if r % 2 == 0 and (len(minimal) != 1 or minimal[0].tokens != flash):
        failures.append(f"{s!r}: even r={r} but {len(minimal)} minimizers")
    for d in found:
        if d.replay() != bytes(s):
            failures.append(f"{s!r}: decomposition {d.choices} does not replay")
            break
    return failures
