"""
Line-oriented text form of a token sequence::

    FLASHBACK v1
    @$ 1
    CFF 1
    AY 1
    SSA 0

Sentinels print as ``@`` and ``$``.  Printable ASCII other than space,
``@``, ``$`` and backslash prints literally; those three are backslash
escaped and every other byte is ``\\xHH`` with uppercase hex.  Parsing is
strict, so ``parse(render(T)) == T`` and rendering is injective.
"""

import re

from .codec import CLOSE_SENTINEL, OPEN_SENTINEL, BilateralToken, TokenSequence
from .errors import ParseError

HEADER = "FLASHBACK v1"

_ESCAPES = {ord("@"): "\\@", ord("$"): "\\$", ord("\\"): "\\\\"}
_HEX = re.compile(r"[0-9A-F]{2}")
_SPLIT = re.compile(r"0|[1-9][0-9]*")


def escape_symbol(c):
    if c == OPEN_SENTINEL:
        return "@"
    if c == CLOSE_SENTINEL:
        return "$"
    if c in _ESCAPES:
        return _ESCAPES[c]
    if 0x20 < c < 0x7F:
        return chr(c)
    return f"\\x{c:02X}"


def escape_bytes(data):
    return "".join(escape_symbol(c) for c in data)


def render(tokens):
    lines = [HEADER]
    for tok in tokens:
        lines.append(f"{escape_bytes(tok.symbols)} {tok.split}")
    return "\n".join(lines) + "\n"


def _unescape(field, lineno):
    out = []
    i = 0
    while i < len(field):
        ch = field[i]
        if ch == "@":
            out.append(OPEN_SENTINEL)
        elif ch == "$":
            out.append(CLOSE_SENTINEL)
        elif ch == "\\":
            nxt = field[i + 1 : i + 2]
            if nxt in ("@", "$", "\\"):
                out.append(ord(nxt))
                i += 1
            elif nxt == "x" and _HEX.fullmatch(field[i + 2 : i + 4]):
                value = int(field[i + 2 : i + 4], 16)
                if 0x20 < value < 0x7F:
                    raise ParseError(f"byte {chr(value)!r} has a shorter spelling", lineno)
                out.append(value)
                i += 3
            else:
                raise ParseError(f"bad escape at column {i + 1}", lineno)
        elif 0x20 < ord(ch) < 0x7F:
            out.append(ord(ch))
        else:
            raise ParseError(f"unescaped character {ch!r} at column {i + 1}", lineno)
        i += 1
    return tuple(out)


def parse(text):
    """Parse a document (``str`` or ASCII ``bytes``) into a :class:`TokenSequence`."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ASCII byte at offset {exc.start}") from None
    if not text:
        raise ParseError("empty document", 1)
    if not text.endswith("\n"):
        raise ParseError("document must end with a newline", text.count("\n") + 1)
    lines = text[:-1].split("\n")
    if lines[0] != HEADER:
        raise ParseError(f"expected header {HEADER!r}", 1)
    if len(lines) < 2:
        raise ParseError("no tokens", 2)
    tokens = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 2 or not parts[0]:
            raise ParseError("expected '<symbols> <split>'", lineno)
        field, split = parts
        if not _SPLIT.fullmatch(split):
            raise ParseError(f"split {split!r} is not a decimal integer", lineno)
        symbols = _unescape(field, lineno)
        try:
            tokens.append(BilateralToken(symbols, int(split)))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return TokenSequence.from_tokens(tokens)
