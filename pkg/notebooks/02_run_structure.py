"""
Runs decide everything
======================

Token ``d`` pairs run ``d`` with run ``r + 1 - d``, so the token sequence can be
read straight off the run-length encoding.
"""

# %%
from flashback import decompose
from flashback.runs import is_palindrome_by_rle, kernel, predict_tokens, rle, token_count

s = b"CASSAYFF"
enc = rle(s)
print(enc, "r =", enc.r)
print("predicted:", predict_tokens(enc))
print("actual:   ", decompose(s))
print("k =", token_count(enc.r))

# %%
# The kernel is the middle run, or the two middle runs when r is even.
for w in (b"CASSAYFF", b"ABCBA", b"AAAB", b"ABBBBA"):
    ker = kernel(w)
    print(w, "kernel", ker.symbols, "palindrome", is_palindrome_by_rle(w))

# %%
# Reversal and byte dilation act token by token.
from flashback.runs import dilate_tokens, reverse_tokens

T = decompose(s)
print(reverse_tokens(T) == decompose(s[::-1]))
print(dilate_tokens(T, 3) == decompose(bytes(c for c in s for _ in range(3))))
