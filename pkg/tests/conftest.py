import pytest

from sturmian import DirectiveSequence, WordFamily


def family(text: str, budget: int = 10**8) -> WordFamily:
    return WordFamily(DirectiveSequence.parse(text), budget=budget)


@pytest.fixture
def fib() -> WordFamily:
    return family("fib")


def brute_pal_len(word: bytes) -> int:
    """Plain quadratic DP with direct palindrome checks; the reference
    everything else is measured against."""
    n = len(word)
    best = [n + 1] * (n + 1)
    best[0] = 0
    for i in range(1, n + 1):
        for j in range(i):
            part = word[j:i]
            if part == part[::-1]:
                best[i] = min(best[i], best[j] + 1)
    return best[n]


def assert_cuts_ok(word: bytes, pal_len: int, cuts) -> None:
    assert cuts[0] == 0 and cuts[-1] == len(word)
    assert len(cuts) == pal_len + 1
    for k in range(len(cuts) - 1):
        part = word[cuts[k] : cuts[k + 1]]
        assert part and part == part[::-1]
