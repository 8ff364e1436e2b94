import itertools

from hoffbound.numerics import binom
from hoffbound.spectra import GraphParams, diameter


def hamming_grid(max_n=12, qs=(2, 3, 5)):
    for q in qs:
        for n in range(1, max_n + 1):
            for p in range(1, n + 1):
                yield GraphParams.hamming(n, q, p)


def johnson_grid(max_k=8, max_n=20):
    for k in range(1, max_k + 1):
        for n in range(k + 1, max_n + 1):
            for p in range(1, diameter("johnson", n, k) + 1):
                yield GraphParams.johnson(n, k, p)


def kneser_grid(max_k=8, max_n=20):
    for k in range(1, max_k + 1):
        for n in range(2 * k + 1, max_n + 1):
            for p in range(1, diameter("kneser", n, k) + 1):
                yield GraphParams.kneser(n, k, p)


def full_grid():
    return itertools.chain(hamming_grid(), johnson_grid(), kneser_grid())


def head_sum(params, degrees):
    """Largest eigenvalue from the neighbourhood sizes of the scheme."""
    if params.family == "hamming":
        return sum((params.q - 1) ** i * binom(params.n, i) for i in degrees)
    return sum(binom(params.k, i) * binom(params.n - params.k, i) for i in degrees)


# -- acceptance summary --------------------------------------------------------

import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, text = mark.args
    if report.failed or (report.when == "call" and not report.passed):
        _criteria[number] = (text, "FAIL")
    elif report.when == "call":
        _criteria.setdefault(number, (text, "PASS"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, verdict = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {text}")
