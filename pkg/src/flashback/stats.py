"""
Token-count statistics for uniformly random strings.

For ``n`` i.i.d. uniform symbols over ``sigma`` letters the number of run
boundaries ``X = r - 1`` is Binomial(n - 1, p) with ``p = (sigma - 1)/sigma``,
and ``k = 1 + ceil((X + 1)/2)``.  The closed forms below follow from that;
:func:`monte_carlo` samples real strings through the codec as a cross-check.
"""

import math
from dataclasses import dataclass

import numpy as np

from .codec import decompose
from .errors import ParamOutOfRangeError
from .runs import kernel, run_count


def int_power(x, e):
    """``x ** e`` by repeated squaring; ``0 ** 0 == 1`` and negative ``x`` is fine."""
    result = 1.0
    base = float(x)
    while e:
        if e & 1:
            result *= base
        base *= base
        e >>= 1
    return result


@dataclass(frozen=True)
class StatParams:
    n: int
    sigma: int

    def __post_init__(self):
        if self.n < 2:
            raise ParamOutOfRangeError(f"n must be >= 2, got {self.n}")
        if self.sigma < 2:
            raise ParamOutOfRangeError(f"sigma must be >= 2, got {self.sigma}")
        if self.sigma > 256:
            raise ParamOutOfRangeError(f"sigma must be <= 256 for byte strings, got {self.sigma}")

    @property
    def p(self):
        return (self.sigma - 1) / self.sigma

    @property
    def q(self):
        return (2 - self.sigma) / self.sigma

    @property
    def m(self):
        return self.n - 1


def expected_k(params):
    p, q, m = params.p, params.q, params.m
    return 1 + (1 + m * p) / 2 + (1 + int_power(q, m)) / 4


def variance_k(params):
    """``m p(1-p)/4 - m p(1-p) q^(m-1)/2 + (1 - q^2m)/16``.

    Evaluated with ``4 p(1-p) = 1 - q^2`` so the n = 2 case cancels to exactly 0.
    """
    q, m = params.q, params.m
    spread = m * (1 - q * q)
    return (spread * (1 - 2 * int_power(q, m - 1)) + (1 - int_power(q, 2 * m))) / 16


def kernel_singleton_prob(params):
    """Probability that the kernel uses exactly one distinct symbol (``r`` odd)."""
    return 0.5 * (1 + int_power(params.q, params.m))


@dataclass(frozen=True)
class SampleStats:
    trials: int
    seed: int
    mean_k: float
    var_k: float
    frac_kernel_singleton: float
    mean_boundaries: float
    var_boundaries: float
    k_histogram: dict
    identity_failures: int


_SEED_MASK = (1 << 64) - 1


def trial_rng(seed, index):
    """Generator for one trial, a pure function of ``(seed, index)``."""
    return np.random.default_rng(np.random.SeedSequence(seed & _SEED_MASK, spawn_key=(index,)))


def monte_carlo(params, trials, seed=0):
    """Sample ``trials`` strings and summarise k, kernel size and run boundaries.

    ``identity_failures`` counts samples where ``k != 1 + ceil((X + 1)/2)``
    or where the kernel's symbol count disagrees with the parity of ``r``.
    """
    if trials < 1:
        raise ParamOutOfRangeError(f"trials must be >= 1, got {trials}")
    ks = np.empty(trials, dtype=np.int64)
    xs = np.empty(trials, dtype=np.int64)
    singleton = 0
    failures = 0
    for i in range(trials):
        s = trial_rng(seed, i).integers(0, params.sigma, params.n, dtype=np.uint8)
        k = len(decompose(s))
        r = run_count(s)
        ker = kernel(s)
        ks[i] = k
        xs[i] = r - 1
        singleton += ker.distinct_symbol_count == 1
        if k != 1 + math.ceil(r / 2) or (ker.distinct_symbol_count == 1) != (r % 2 == 1):
            failures += 1
    values, counts = np.unique(ks, return_counts=True)
    return SampleStats(
        trials=trials,
        seed=seed,
        mean_k=float(ks.mean()),
        var_k=float(ks.var()),
        frac_kernel_singleton=singleton / trials,
        mean_boundaries=float(xs.mean()),
        var_boundaries=float(xs.var()),
        k_histogram=dict(zip(values.tolist(), counts.tolist())),
        identity_failures=failures,
    )


def agreement(params, sample, n_se=4.0):
    """Compare a sample with the closed forms; returns ``(ok, rows)``.

    Each row is ``(name, closed_form, empirical, standard_error)``.  A zero
    standard error demands an exact match.
    """
    t = sample.trials
    p_single = kernel_singleton_prob(params)
    m, p = params.m, params.p
    rows = [
        ("mean_k", expected_k(params), sample.mean_k, math.sqrt(variance_k(params) / t)),
        ("frac_kernel_singleton", p_single, sample.frac_kernel_singleton,
         math.sqrt(p_single * (1 - p_single) / t)),
        ("mean_boundaries", m * p, sample.mean_boundaries, math.sqrt(m * p * (1 - p) / t)),
    ]
    # binomial central moments for the spread of the sample variance
    mu2 = m * p * (1 - p)
    mu4 = mu2 * (1 + 3 * (m - 2) * p * (1 - p))
    var_of_var = (mu4 - (t - 3) / (t - 1) * mu2**2) / t if t > 1 else 0.0
    rows.append(("var_boundaries", mu2, sample.var_boundaries, math.sqrt(max(var_of_var, 0.0))))
    ok = sample.identity_failures == 0
    for _, expected, got, se in rows:
        ok &= abs(got - expected) <= max(n_se * se, 1e-12)
    return bool(ok), rows
