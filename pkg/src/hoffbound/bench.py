"""Operation counts and wall-clock timings for the bench subcommand.

Counts come from the exact recurrence path (instrumented row updates and
accumulations). Timings use plain float re-implementations so that big
integer growth does not swamp the algorithmic scaling; these float values
never feed a reported bound.
"""
import math
import time
from dataclasses import dataclass
from typing import Optional

from .spectra import GraphParams, kneser_preimage, spectrum


@dataclass
class BenchReport:
    params: GraphParams
    dp_update_count: int
    row_updates: int
    accumulations: int
    outer_iterations: int
    naive_term_count: int
    dp_seconds: float
    naive_seconds: float
    exact_seconds: Optional[float] = None


def _hamming_dp_float(n, q, p):
    krav = [1.0] * (n + 1)
    lam = [0.0] * (n + 1)
    for i in range(1, p + 1):
        for t in range(n, 0, -1):
            krav[t] = (n - t - i + 1) * (q - 1) / i * krav[t] - t / i * krav[t - 1]
        krav[0] = (n - i + 1) * (q - 1) / i * krav[0]
        for t in range(n + 1):
            lam[t] += krav[t]
    return lam


def _eberlein_dp_float(n, k, degrees, selected):
    alpha = [0.0] + [float((n - k - i + 1) * (k - i + 1)) for i in range(1, k + 1)]
    beta = [float(j * (n - j + 1)) for j in range(k + 1)]
    prev = [1.0] * (k + 1)
    curr = [alpha[1] - b for b in beta]
    lam = [0.0] * (k + 1)
    for i in range(1, degrees + 1):
        if i >= 2:
            sq = float(i * i)
            temp = [
                (alpha[i] - beta[j] + (i - 1) ** 2) / sq * curr[j] - alpha[i - 1] / sq * prev[j]
                for j in range(k + 1)
            ]
            prev, curr = curr, temp
        if i in selected:
            for j in range(k + 1):
                lam[j] += curr[j]
    return lam


def _comb(a, b):
    return math.comb(a, b) if 0 <= b <= a else 0


def _naive_float(params):
    """Closed-form double sums in floats; returns (values, inner term count)."""
    n = params.n
    terms = 0
    lam = []
    if params.family == "hamming":
        q = params.q
        for t in range(n + 1):
            total = 0.0
            for i in range(1, params.p + 1):
                for j in range(i + 1):
                    total += (-1) ** j * float(q - 1) ** (i - j) * _comb(t, j) * _comb(n - t, i - j)
                terms += i + 1
            lam.append(total)
        return lam, terms
    k = params.k
    degrees = range(1, params.p + 1) if params.family == "johnson" else kneser_preimage(n, k, params.p)
    for j in range(k + 1):
        total = 0.0
        for i in degrees:
            for t in range(i + 1):
                total += (-1) ** t * float(_comb(j, t) * _comb(k - j, i - t) * _comb(n - k - j, i - t))
            terms += i + 1
        lam.append(total)
    return lam, terms


def _dp_float(params):
    if params.family == "hamming":
        return _hamming_dp_float(params.n, params.q, params.p)
    n, k = params.n, params.k
    if params.family == "johnson":
        return _eberlein_dp_float(n, k, params.p, set(range(1, params.p + 1)))
    return _eberlein_dp_float(n, k, k, set(kneser_preimage(n, k, params.p)))


def _timed(fn, repetitions):
    start = time.perf_counter()
    for _ in range(repetitions):
        fn()
    return (time.perf_counter() - start) / repetitions


def bench(params: GraphParams, repetitions=10, exact_timing=False) -> BenchReport:
    counter = {}
    spectrum(params, counter=counter)
    rows, acc = counter.get("row", 0), counter.get("acc", 0)
    _, terms = _naive_float(params)
    report = BenchReport(
        params,
        dp_update_count=rows + acc,
        row_updates=rows,
        accumulations=acc,
        outer_iterations=counter.get("outer", 0),
        naive_term_count=terms,
        dp_seconds=_timed(lambda: _dp_float(params), repetitions),
        naive_seconds=_timed(lambda: _naive_float(params), repetitions),
    )
    if exact_timing:
        report.exact_seconds = _timed(lambda: spectrum(params), repetitions)
    return report
