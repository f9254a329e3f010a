"""
Which token sequences come from a string?
=========================================

``validate`` checks the structural conditions and reports every violation
with its depth; ``reassemble`` builds the unique string for a valid sequence.
"""

# %%
from flashback import decompose
from flashback.codec import SENTINEL_TOKEN, BilateralToken, TokenSequence
from flashback.image import reassemble, validate

T = decompose(b"CASSAYFF")
print(validate(T).summary(), reassemble(T))

# %%
# Two consecutive depths starting with the same symbol cannot happen: the
# front run would have been longer.
bad = TokenSequence.from_tokens(
    [SENTINEL_TOKEN, BilateralToken(tuple(b"AB"), 1), BilateralToken(tuple(b"AC"), 1), BilateralToken(tuple(b"D"), 0)]
)
report = validate(bad)
print(report.valid)
for v in report.violations:
    print(v.condition, v.depth, v.message)
