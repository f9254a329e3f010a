"""
Is greedy peeling optimal?
==========================

Any strategy that peels a prefix of the leading run and a suffix of the
trailing run yields a valid decomposition.  Exhaustive search shows none uses
fewer content tokens than ceil(r / 2), and for even r the greedy one is the
only minimizer.
"""

# %%
from flashback.peeling import check_optimality, enumerate_peelings, minimal_peelings

for d in enumerate_peelings(b"AABAA"):
    print(d.choices, [str(t) for t in d.tokens], d.content_count)

# %%
best = minimal_peelings(b"CASSAYFF")
print(len(best), [str(t) for t in best[0].tokens])

# %%
from itertools import product

failures = [
    bytes(t) for n in range(1, 9) for t in product(b"AB", repeat=n) if check_optimality(bytes(t))
]
print("binary strings up to length 8 with a failure:", failures)
