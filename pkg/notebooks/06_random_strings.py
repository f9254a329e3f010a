"""
Token counts of random strings
==============================

For uniform strings of length n over sigma symbols the number of runs minus
one is binomial, which gives closed forms for the mean and variance of the
token count.  Monte Carlo agrees.
"""

# %%
from flashback.stats import StatParams, agreement, expected_k, kernel_singleton_prob, monte_carlo, variance_k

params = StatParams(64, 4)
print("E[k]", expected_k(params), "Var[k]", variance_k(params), "P(single-symbol kernel)", kernel_singleton_prob(params))

# %%
sample = monte_carlo(params, 20_000, seed=1)
ok, rows = agreement(params, sample)
for row in rows:
    print(row)
print("agree" if ok else "disagree")

# %%
# With two symbols the kernel is one run exactly half the time, for any n.
print([kernel_singleton_prob(StatParams(n, 2)) for n in (2, 5, 50)])
