"""Brute-force oracles shared by the tests.

These deliberately avoid the package's own machinery: containment by
trying every subsequence, involutions by filtering all permutations.
"""

from itertools import combinations, permutations

import pytest


def brute_contains(pi, sigma):
    k = len(sigma)
    order = sorted(range(k), key=lambda i: sigma[i])
    for idx in combinations(range(len(pi)), k):
        vals = [pi[i] for i in idx]
        if all(vals[order[j]] < vals[order[j + 1]] for j in range(k - 1)):
            return True
    return False


def all_involutions(n):
    for p in permutations(range(1, n + 1)):
        if all(p[p[i] - 1] == i + 1 for i in range(n)):
            yield p


def brute_count(basis, n, involutions_only=True):
    source = all_involutions(n) if involutions_only else permutations(range(1, n + 1))
    return sum(1 for p in source if not any(brute_contains(p, b) for b in basis))


def brute_is_simple(pi):
    n = len(pi)
    if n < 2:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if j - i + 1 == n:
                continue
            window = pi[i:j + 1]
            if max(window) - min(window) == j - i:
                return False
    return True


def involution_numbers(n):
    out = [1, 1]
    for m in range(2, n + 1):
        out.append(out[-1] + (m - 1) * out[-2])
    return out[: n + 1]


@pytest.fixture(scope="session")
def oracle():
    class O:
        contains = staticmethod(brute_contains)
        involutions = staticmethod(all_involutions)
        count = staticmethod(brute_count)
        is_simple = staticmethod(brute_is_simple)
        I = staticmethod(involution_numbers)
    return O


_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    name = item.name
    if name.startswith("test_criterion_") and report.when == "call":
        number = int(name.split("_")[2])
        doc = (item.function.__doc__ or "").strip().splitlines()[0]
        _CRITERIA[number] = (report.outcome, doc)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        outcome, doc = _CRITERIA[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {doc}")
