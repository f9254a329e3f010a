import itertools

import numpy as np
import pytest

from flashback.codec import CLOSE_SENTINEL, OPEN_SENTINEL, BilateralToken, TokenSequence


def toks(*pairs):
    """``toks(("@$", 1), ("CFF", 1), ...)``; the string "@$" means the two sentinels."""
    out = []
    for text, split in pairs:
        if text == "@$":
            symbols = (OPEN_SENTINEL, CLOSE_SENTINEL)
        else:
            symbols = tuple(text.encode("latin-1"))
        out.append(BilateralToken(symbols, split))
    return TokenSequence.from_tokens(out)


def all_strings(alphabet, max_len, min_len=0):
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(alphabet, repeat=n):
            yield bytes(tup)


def random_strings(count, seed, max_len=256, alphabet_sizes=(2, 3, 26, 256)):
    rng = np.random.default_rng(seed)
    for i in range(count):
        sigma = alphabet_sizes[i % len(alphabet_sizes)]
        n = int(rng.integers(0, max_len + 1))
        yield rng.integers(0, sigma, n, dtype=np.uint8).tobytes()


@pytest.fixture(scope="session")
def small_corpus():
    """Exhaustive short strings plus a few hundred random ones, for unit-level sweeps."""
    return list(all_strings(b"ABC", 7)) + list(random_strings(400, seed=11))


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion check")


def pytest_runtest_logreport(report):
    key = getattr(report, "criterion", None)
    if key is None:
        return
    if report.failed:
        _criteria[key] = "FAIL"
    elif report.skipped:
        _criteria.setdefault(key, "SKIP")
    elif report.when == "call":
        _criteria.setdefault(key, "PASS")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(_criteria.items()):
        terminalreporter.write_line(f"{status} criterion {number}: {title}")
