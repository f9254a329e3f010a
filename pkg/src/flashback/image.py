"""
Membership test for the image of the decomposition, and a witness builder.

A sequence ``[(@$,1), tau_1, ..., tau_(k-1)]`` is the decomposition of some
string iff every non-terminal token is one run followed by one run, the
terminal is one run or two distinct adjacent runs, and (for ``k >= 3``) front
symbols and back symbols alternate between consecutive depths, including the
hand-off to the terminal.
"""

from dataclasses import dataclass, field

from .codec import CLOSE_SENTINEL, OPEN_SENTINEL, TokenSequence, is_sentinel
from .errors import NotInImageError

TOKEN_FORM = "TOKEN_FORM"
TERMINAL_FORM = "TERMINAL_FORM"
ALTERNATION_INTERIOR = "ALTERNATION_INTERIOR"
ALTERNATION_BOUNDARY = "ALTERNATION_BOUNDARY"
SENTINEL_HEAD = "SENTINEL_HEAD"


@dataclass(frozen=True)
class Violation:
    condition: str
    depth: int
    message: str


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.violations

    def conditions(self):
        return {(v.condition, v.depth) for v in self.violations}

    def summary(self):
        if self.valid:
            return "valid"
        return "; ".join(f"{v.condition}@{v.depth}: {v.message}" for v in self.violations)

    def to_dict(self):
        return {
            "valid": self.valid,
            "violations": [
                {"condition": v.condition, "depth": v.depth, "message": v.message}
                for v in self.violations
            ],
        }


def _run_count(symbols):
    return 1 + sum(1 for a, b in zip(symbols, symbols[1:]) if a != b)


def _token_tuples(tokens):
    # (symbol list, split) per depth; much cheaper than materializing tokens
    if isinstance(tokens, TokenSequence):
        sym, off = tokens.symbols.tolist(), tokens.offsets.tolist()
        return [(sym[a:b], p) for a, b, p in zip(off, off[1:], tokens.splits.tolist())]
    return [(list(t.symbols), t.split) for t in tokens]


def validate(tokens):
    """Check every image condition and report all violations with their depths."""
    report = ValidationReport()
    bad = report.violations.append
    toks = _token_tuples(tokens)
    k = len(toks)
    if k == 0:
        bad(Violation(SENTINEL_HEAD, 0, "empty token sequence"))
        return report

    head, head_split = toks[0]
    if head != [OPEN_SENTINEL, CLOSE_SENTINEL]:
        bad(Violation(SENTINEL_HEAD, 0, "first token is not the sentinel pair @$"))
    elif k == 1 and head_split != 0:
        bad(Violation(SENTINEL_HEAD, 0, "lone sentinel token must be terminal"))
    elif k >= 2 and head_split != 1:
        bad(Violation(SENTINEL_HEAD, 0, f"sentinel token split is {head_split}, expected 1"))
    for d in range(1, k):
        if any(is_sentinel(c) for c in toks[d][0]):
            bad(Violation(SENTINEL_HEAD, d, "sentinel symbol outside the head token"))
    if k == 1:
        return report

    # (1) token form at non-terminal depths
    for d in range(1, k - 1):
        sigma, p = toks[d]
        if p == 0:
            bad(Violation(TERMINAL_FORM, d, "terminal token before the last position"))
        elif p >= len(sigma):
            bad(Violation(TOKEN_FORM, d, f"split {p} leaves the back part empty"))
        else:
            if _run_count(sigma[:p]) != 1:
                bad(Violation(TOKEN_FORM, d, "front part is not a single run"))
            if _run_count(sigma[p:]) != 1:
                bad(Violation(TOKEN_FORM, d, "back part is not a single run"))

    # (2) terminal form
    last, last_split = toks[-1]
    if last_split != 0:
        bad(Violation(TERMINAL_FORM, k - 1, f"last token has split {last_split}, expected 0"))
    if _run_count(last) > 2:
        bad(Violation(TERMINAL_FORM, k - 1, "terminal is more than two runs"))

    # (3) alternation, only once there is a content token before the terminal
    if k >= 3:
        for d in range(1, k - 2):
            cur, nxt = toks[d][0], toks[d + 1][0]
            if nxt[0] == cur[0]:
                bad(Violation(ALTERNATION_INTERIOR, d + 1, "front symbol repeats the previous depth"))
            if nxt[-1] == cur[-1]:
                bad(Violation(ALTERNATION_INTERIOR, d + 1, "back symbol repeats the previous depth"))
        prev = toks[k - 2][0]
        if last[0] == prev[0]:
            bad(Violation(ALTERNATION_BOUNDARY, k - 1, "terminal starts with the last front symbol"))
        if last[-1] == prev[-1]:
            bad(Violation(ALTERNATION_BOUNDARY, k - 1, "terminal ends with the last back symbol"))
    return report


def reassemble(tokens):
    """Witness string: fronts in depth order, the terminal, then backs in reverse order.

    Built directly from the runs rather than by nesting, so it doubles as an
    independent check on :func:`flashback.codec.reconstruct`.
    """
    report = validate(tokens)
    if not report.valid:
        raise NotInImageError(report.summary())
    content = _token_tuples(tokens)[1:]
    if not content:
        return b""
    fronts = [bytes([sym[0]]) * p for sym, p in content[:-1]]
    backs = [bytes([sym[-1]]) * (len(sym) - p) for sym, p in content[:-1]]
    return b"".join(fronts) + bytes(content[-1][0]) + b"".join(reversed(backs))
