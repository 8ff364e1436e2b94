"""Exact integer/rational helpers.

Python ints are already arbitrary precision, and ``fractions.Fraction`` keeps
itself reduced with a positive denominator, so they serve directly as the
big-integer and big-rational types.
"""
from fractions import Fraction
import operator

BigRational = Fraction

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 whenever k < 0 or n < k.

    Uses the running product C(n, j) = C(n, j-1) * (n - j + 1) / j; each
    division is exact at the point it is taken.
    """
    if k < 0 or n < k:
        return 0
    k = min(k, n - k)
    c = 1
    for j in range(1, k + 1):
        c = c * (n - j + 1) // j
    return c


def rat_arith(a, b, op):
    """Apply ``op`` in {add, sub, mul, div, cmp} to two rationals.

    ``cmp`` returns -1, 0 or 1. Division by zero raises ZeroDivisionError.
    """
    a, b = Fraction(a), Fraction(b)
    if op == "cmp":
        return (a > b) - (a < b)
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def to_decimal(x, sig_digits: int = 6) -> str:
    """Render ``x`` in fixed-point notation with ``sig_digits`` significant
    digits, rounding half to even on the exact value."""
    if sig_digits < 1:
        raise ValueError("sig_digits must be positive")
    x = Fraction(x)
    if x == 0:
        return "0." + "0" * (sig_digits - 1) if sig_digits > 1 else "0"
    sign = "-" if x < 0 else ""
    a = abs(x)
    # exponent e with 10**e <= a < 10**(e + 1)
    e = len(str(a.numerator)) - len(str(a.denominator))
    if Fraction(10) ** e > a:
        e -= 1
    elif Fraction(10) ** (e + 1) <= a:
        e += 1
    scale = sig_digits - 1 - e
    m = round(a * Fraction(10) ** scale)
    if m == 10 ** sig_digits:
        scale -= 1
        m = round(a * Fraction(10) ** scale)
    digits = str(m)
    if scale <= 0:
        return sign + digits + "0" * (-scale)
    digits = digits.rjust(scale + 1, "0")
    return f"{sign}{digits[:-scale]}.{digits[-scale:]}"


def ceil_rational(x) -> int:
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)
