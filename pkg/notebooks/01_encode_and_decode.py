"""
Encoding a string as bilateral tokens
=====================================

Each token packs a run peeled from the front of the string together with a
run peeled from the back.  The first token always holds the two sentinels.
"""

# %%
from flashback import decompose, reconstruct
from flashback.textformat import render

T = decompose(b"CASSAYFF")
for d, tok in enumerate(T[1:], start=1):
    if tok.is_terminal:
        print(d, tok, "terminal", bytes(tok.symbols))
    else:
        print(d, tok, "front", bytes(tok.front), "back", bytes(tok.back))

# %%
# Decoding nests the tokens back together.
print(reconstruct(T))

# %%
# The text form used by the command line tool.
print(render(T), end="")

# %%
# Arbitrary bytes survive the round trip, including NUL and 0xFF.
import numpy as np

data = np.random.default_rng(0).integers(0, 256, 1 << 16, dtype=np.uint8).tobytes()
assert reconstruct(decompose(data)) == data
print(len(decompose(data)), "tokens for", len(data), "bytes")
