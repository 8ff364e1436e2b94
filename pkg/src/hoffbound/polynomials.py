"""Kravchuk and Eberlein polynomials at integer arguments.

Two evaluation routes are provided: the defining finite sums
(``kravchuk_direct``, ``eberlein_direct``) and one-degree-at-a-time row
updates built on the three-term recurrences (``kravchuk_row_next``,
``eberlein_row_next``). The row updates work in exact rationals and check
that every finished entry is an integer.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatchError, ParameterError
from .numerics import binom


@dataclass(frozen=True)
class PolyRow:
    """Values of one polynomial degree at the arguments 0, 1, ..., len-1."""

    degree: int
    values: tuple

    def __len__(self):
        return len(self.values)

    def __getitem__(self, t):
        return self.values[t]


@dataclass(frozen=True)
class EberleinCoeffs:
    """alpha[i] = (n-k-i+1)(k-i+1) for i = 1..k (alpha[0] unused, stored as
    None) and beta[j] = j(n-j+1) for j = 0..k."""

    n: int
    k: int
    alpha: tuple
    beta: tuple

    @classmethod
    def build(cls, n, k):
        alpha = (None,) + tuple((n - k - i + 1) * (k - i + 1) for i in range(1, k + 1))
        beta = tuple(j * (n - j + 1) for j in range(k + 1))
        return cls(n, k, alpha, beta)


def ones_row(length):
    return PolyRow(0, (1,) * length)


def _integral(value, where):
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral recurrence entry {value} at {where}")
    return value.numerator


def _tick(counter, key, amount=1):
    if counter is not None:
        counter[key] = counter.get(key, 0) + amount


def kravchuk_direct(i, x, n, q):
    """K_i(x; n, q) = sum_j (-1)^j (q-1)^(i-j) C(x, j) C(n-x, i-j)."""
    if not (0 <= i <= n and 0 <= x <= n and q >= 2):
        raise ParameterError(
            f"kravchuk_direct needs 0 <= i, x <= n and q >= 2 (got i={i}, x={x}, n={n}, q={q})"
        )
    return sum(
        (-1) ** j * (q - 1) ** (i - j) * binom(x, j) * binom(n - x, i - j)
        for j in range(i + 1)
    )


def eberlein_direct(i, x, n, k):
    """E_i(x; n, k) = sum_t (-1)^t C(x, t) C(k-x, i-t) C(n-k-x, i-t).

    For x > n - k the last factor has a negative upper index and vanishes.
    """
    if not (k >= 0 and n >= k and 0 <= i <= k and 0 <= x <= k):
        raise ParameterError(
            f"eberlein_direct needs 0 <= i, x <= k <= n (got i={i}, x={x}, n={n}, k={k})"
        )
    return sum(
        (-1) ** t * binom(x, t) * binom(k - x, i - t) * binom(n - k - x, i - t)
        for t in range(i + 1)
    )


def kravchuk_row_next(row, i, n, q, counter=None):
    """Advance a Kravchuk row from degree i-1 to degree i.

    Entries are rewritten for t = n, n-1, ..., 1 and then t = 0, so each new
    entry reads the previous degree's value one position to the left.
    """
    if i == 0:
        return ones_row(n + 1)
    if row.degree != i - 1:
        raise DegreeMismatchError(f"expected a degree {i - 1} row, got degree {row.degree}")
    if not (1 <= i <= n) or len(row) != n + 1:
        raise ParameterError(f"row of length {len(row)} cannot advance to degree {i} for n={n}")
    krav = list(row.values)
    for t in range(n, 0, -1):
        value = Fraction((n - t - i + 1) * (q - 1), i) * krav[t] - Fraction(t, i) * krav[t - 1]
        krav[t] = _integral(value, (i, t))
    krav[0] = _integral(Fraction((n - i + 1) * (q - 1), i) * krav[0], (i, 0))
    _tick(counter, "row", n + 1)
    return PolyRow(i, tuple(krav))


def eberlein_base_row(n, k, coeffs=None, counter=None):
    """Degree-1 Eberlein row: entry j is alpha_1 - beta_j."""
    if not (n >= k >= 1):
        raise ParameterError(f"eberlein_base_row needs n >= k >= 1 (got n={n}, k={k})")
    c = coeffs or EberleinCoeffs.build(n, k)
    _tick(counter, "row", k + 1)
    return PolyRow(1, tuple(c.alpha[1] - c.beta[j] for j in range(k + 1)))


def eberlein_row_next(prev, curr, i, n, k, coeffs=None, counter=None):
    """Degree-i Eberlein row from the rows of degrees i-2 and i-1."""
    if i == 0:
        return ones_row(k + 1)
    if i == 1:
        return eberlein_base_row(n, k, coeffs, counter)
    if prev.degree != i - 2 or curr.degree != i - 1:
        raise DegreeMismatchError(
            f"expected degrees {i - 2} and {i - 1}, got {prev.degree} and {curr.degree}"
        )
    if not (2 <= i <= k) or len(prev) != k + 1 or len(curr) != k + 1:
        raise ParameterError(f"cannot advance Eberlein rows to degree {i} for k={k}")
    c = coeffs or EberleinCoeffs.build(n, k)
    sq = i * i
    lag = Fraction(c.alpha[i - 1], sq)
    out = []
    for j in range(k + 1):
        lead = Fraction(c.alpha[i] - c.beta[j] + (i - 1) ** 2, sq)
        out.append(_integral(lead * curr[j] - lag * prev[j], (i, j)))
    _tick(counter, "row", k + 1)
    return PolyRow(i, tuple(out))


def kravchuk_rows(n, q, max_degree):
    """Yield Kravchuk rows of degrees 1..max_degree."""
    row = ones_row(n + 1)
    for i in range(1, max_degree + 1):
        row = kravchuk_row_next(row, i, n, q)
        yield row


def eberlein_rows(n, k, max_degree):
    """Yield Eberlein rows of degrees 1..max_degree."""
    coeffs = EberleinCoeffs.build(n, k)
    prev, curr = ones_row(k + 1), None
    for i in range(1, max_degree + 1):
        if i == 1:
            curr = eberlein_base_row(n, k, coeffs)
        else:
            prev, curr = curr, eberlein_row_next(prev, curr, i, n, k, coeffs)
        yield curr
