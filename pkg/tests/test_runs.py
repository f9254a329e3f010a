import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import all_strings, toks
from oracles import runs_of
from flashback.codec import decompose
from flashback.errors import EmptyInputError, NotInImageError
from flashback.runs import (
    Run,
    RunLengthEncoding,
    dilate_tokens,
    is_palindrome_by_rle,
    kernel,
    predict_tokens,
    reverse_tokens,
    rle,
    run_count,
    tandem_token_period,
    token_count,
)


@pytest.mark.parametrize(
    "s, runs",
    [
        (b"CASSAYFF", [(b"C", 1), (b"A", 1), (b"S", 2), (b"A", 1), (b"Y", 1), (b"F", 2)]),
        (b"A", [(b"A", 1)]),
        (b"AABBB", [(b"A", 2), (b"B", 3)]),
    ],
)
def test_rle_examples(s, runs):
    enc = rle(s)
    assert enc.runs == [Run(a[0], m) for a, m in runs]
    assert enc.expand() == s


def test_rle_matches_groupby(small_corpus):
    for s in small_corpus:
        if s:
            assert [(r.symbol, r.multiplicity) for r in rle(s).runs] == runs_of(s)
            assert run_count(s) == len(runs_of(s))
    assert run_count(b"") == 0


def test_rle_rejects_empty_and_bad_runs():
    with pytest.raises(EmptyInputError):
        rle(b"")
    with pytest.raises(ValueError):
        RunLengthEncoding.from_runs([(65, 1), (65, 2)])
    with pytest.raises(ValueError):
        RunLengthEncoding.from_runs([(65, 0)])


@pytest.mark.parametrize(
    "s, expected",
    [
        (b"CASSAYFF", toks(("@$", 1), ("CFF", 1), ("AY", 1), ("SSA", 0))),
        (b"AAAA", toks(("@$", 1), ("AAAA", 0))),
        # run 2 (B) pairs with run 5 (A), so depth 2 is BA_1
        (b"ABABAB", toks(("@$", 1), ("AB", 1), ("BA", 1), ("AB", 0))),
    ],
)
def test_predict_tokens_examples(s, expected):
    assert predict_tokens(rle(s)) == expected
    assert decompose(s) == expected


def test_predict_matches_peeling(small_corpus):
    for s in small_corpus:
        if s:
            assert predict_tokens(rle(s)) == decompose(s), s


@pytest.mark.parametrize("r, k", [(6, 4), (1, 2), (7, 5), (2, 2)])
def test_token_count(r, k):
    assert token_count(r) == k


def test_token_count_seven_runs():
    assert len(decompose(b"ABCDEFG")) == token_count(7) == 5
    with pytest.raises(ValueError):
        token_count(0)


def test_count_bound(small_corpus):
    for s in small_corpus:
        if s:
            k = len(decompose(s))
            assert k == 1 + math.ceil(run_count(s) / 2)
            n, r = len(s), run_count(s)
            assert k <= math.ceil(n / 2) + 1
            if r == n:
                assert k == math.ceil(n / 2) + 1
            # equality also holds for even n with one doubled run, e.g. "AABC"
            assert (k == math.ceil(n / 2) + 1) == (r == n or (n % 2 == 0 and r == n - 1))


def test_count_bound_equality_without_unit_runs():
    assert len(decompose(b"AABC")) == math.ceil(4 / 2) + 1


@pytest.mark.parametrize(
    "s, symbols, distinct",
    [(b"CASSAYFF", b"SSA", 2), (b"A", b"A", 1), (b"ABCBA", b"C", 1)],
)
def test_kernel_examples(s, symbols, distinct):
    ker = kernel(s)
    assert ker.symbols == symbols
    assert ker.distinct_symbol_count == distinct
    assert decompose(s)[-1].symbols == tuple(symbols)


def test_kernel_is_terminal_token(small_corpus):
    for s in small_corpus:
        if s:
            ker = kernel(s)
            assert tuple(ker.symbols) == decompose(s)[-1].symbols
            assert ker.distinct_symbol_count == len(set(ker.symbols)) <= 2


@pytest.mark.parametrize("s, expected", [(b"ABA", True), (b"CASSAYFF", False), (b"AABBAA", True)])
def test_palindrome_examples(s, expected):
    assert is_palindrome_by_rle(s) is expected


def test_palindrome_agrees_with_reversal():
    for s in all_strings(b"ABC", 8, min_len=1):
        assert is_palindrome_by_rle(s) == (s == s[::-1]), s


def test_reverse_tokens_examples():
    assert reverse_tokens(decompose(b"CASSAYFF")) == toks(
        ("@$", 1), ("FFC", 2), ("YA", 1), ("ASS", 0)
    )
    assert reverse_tokens(decompose(b"CASSAYFF")) == decompose(b"FFYASSAC")
    assert reverse_tokens(decompose(b"A")) == decompose(b"A")
    assert reverse_tokens(decompose(b"ABAB")) == decompose(b"BABA")
    assert reverse_tokens(decompose(b"")) == decompose(b"")


def test_reversal_law(small_corpus):
    for s in small_corpus:
        assert reverse_tokens(decompose(s)) == decompose(s[::-1]), s


def test_reverse_rejects_non_image():
    with pytest.raises(NotInImageError):
        reverse_tokens(toks(("@$", 1), ("AB", 1), ("AC", 1), ("D", 0)))


def dilate(s, c):
    return bytes(b for b in s for _ in range(c))


def test_dilate_examples():
    T = decompose(b"CASSAYFF")
    assert dilate_tokens(T, 1) == T
    assert dilate_tokens(T, 2) == toks(("@$", 1), ("CCFFFF", 2), ("AAYY", 2), ("SSSSAA", 0))
    assert dilate_tokens(T, 2) == decompose(b"CCAASSSSAAYYFFFF")
    assert dilate_tokens(decompose(b"AB"), 3) == toks(("@$", 1), ("AAABBB", 0))


@pytest.mark.parametrize("c", [1, 2, 3])
def test_dilation_law(small_corpus, c):
    for s in small_corpus[:3000]:
        assert dilate_tokens(decompose(s), c) == decompose(dilate(s, c)), s


def test_dilate_rejects_bad_factor():
    with pytest.raises(ValueError):
        dilate_tokens(decompose(b"AB"), 0)


@pytest.mark.parametrize(
    "s, w_runs, expected",
    [(b"ABABAB", 2, True), (b"ABCABC", 3, True), (b"CASSAYFF", 2, False)],
)
def test_tandem_examples(s, w_runs, expected):
    assert tandem_token_period(decompose(s), w_runs) is expected


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 3), st.integers(1, 3)), min_size=2, max_size=6),
    st.integers(1, 5),
)
def test_tandem_powers_are_periodic(runs, m):
    # build w with alternating runs and distinct first/last symbols
    w_runs = []
    for a, mult in runs:
        if w_runs and w_runs[-1][0] == a:
            continue
        w_runs.append((a, mult))
    if len(w_runs) < 2 or w_runs[0][0] == w_runs[-1][0]:
        return
    w = b"".join(bytes([65 + a]) * mult for a, mult in w_runs)
    assert tandem_token_period(decompose(w * m), len(w_runs))


def test_tandem_terminal_not_part_of_period():
    # including the terminal would break the property for odd run counts
    T = decompose(b"ABC" * 3)
    content = T[1:]
    assert content[1] != content[4]
    assert tandem_token_period(T, 3)
