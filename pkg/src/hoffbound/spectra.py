"""Distinct adjacency spectra of Hamming, Johnson and Kneser graph powers.

Every power of these graphs lies in the Bose-Mesner algebra of the
underlying association scheme, so its eigenvalue on eigenspace V_t is a sum
of scheme eigenvalues over the distances that the power joins. The sums are
accumulated row by row from the polynomial recurrences.
"""
from dataclasses import dataclass, replace
from typing import Optional

from .errors import ParameterError
from .numerics import binom
from .polynomials import (
    EberleinCoeffs,
    eberlein_base_row,
    eberlein_row_next,
    kravchuk_row_next,
    ones_row,
)

FAMILIES = ("hamming", "johnson", "kneser")


def _ceil_div(a, b):
    return -(-a // b)


def diameter(family, n, q_or_k):
    """Diameter of H(n, q), J(n, k) or K(n, k)."""
    if family == "hamming":
        q = q_or_k
        if n < 1 or q < 2:
            raise ParameterError(f"H(n, q) needs n >= 1 and q >= 2 (got n={n}, q={q})")
        return n
    k = q_or_k
    if family == "johnson":
        if not n >= k >= 1:
            raise ParameterError(f"J(n, k) needs n >= k >= 1 (got n={n}, k={k})")
        return min(k, n - k)
    if family == "kneser":
        if k < 1:
            raise ParameterError(f"K(n, k) needs k >= 1 (got k={k})")
        if n == 2 * k:
            raise ParameterError(
                f"K({n}, {k}) has n = 2k: every power is a perfect matching "
                "(chromatic number 2), so n > 2k is required"
            )
        if n < 2 * k:
            raise ParameterError(
                f"K(n, k) needs n > 2k (got n={n}, k={k}); for n < 2k the graph has no edges"
            )
        return _ceil_div(k - 1, n - 2 * k) + 1
    raise ParameterError(f"unknown family {family!r}")


_DIAMETER_RULE = {
    "hamming": "diam(H(n, q)) = n",
    "johnson": "diam(J(n, k)) = min{k, n - k}",
    "kneser": "diam(K(n, k)) = ceil((k - 1)/(n - 2k)) + 1",
}


@dataclass(frozen=True)
class GraphParams:
    """A validated (family, n, q or k, p) triple.

    ``q`` is set for Hamming graphs, ``k`` for Johnson and Kneser graphs.
    """

    family: str
    n: int
    p: int
    q: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")
        if (self.family == "hamming") != (self.q is not None) or (self.q is None) == (self.k is None):
            raise ParameterError(f"{self.family} takes {'q' if self.family == 'hamming' else 'k'}")
        diam = diameter(self.family, self.n, self.second)
        if not 1 <= self.p <= diam:
            raise ParameterError(
                f"p={self.p} is outside 1 <= p <= {diam} for {self.label()} "
                f"({_DIAMETER_RULE[self.family]}); powers at or beyond the diameter "
                "are complete graphs, use --clamp-p (clamp_p=True) to truncate p"
            )

    @classmethod
    def make(cls, family, n, q_or_k, p, clamp_p=False):
        if clamp_p and p >= 1:
            p = min(p, diameter(family, n, q_or_k))
        if family == "hamming":
            return cls(family, n, p, q=q_or_k)
        return cls(family, n, p, k=q_or_k)

    @classmethod
    def hamming(cls, n, q, p, clamp_p=False):
        return cls.make("hamming", n, q, p, clamp_p)

    @classmethod
    def johnson(cls, n, k, p, clamp_p=False):
        return cls.make("johnson", n, k, p, clamp_p)

    @classmethod
    def kneser(cls, n, k, p, clamp_p=False):
        return cls.make("kneser", n, k, p, clamp_p)

    @property
    def second(self):
        return self.q if self.family == "hamming" else self.k

    @property
    def diameter(self):
        return diameter(self.family, self.n, self.second)

    @property
    def vertex_count(self):
        if self.family == "hamming":
            return self.q ** self.n
        return binom(self.n, self.k)

    def with_p(self, p):
        return replace(self, p=p)

    def label(self):
        letter = {"hamming": "H", "johnson": "J", "kneser": "K"}[self.family]
        return f"{letter}({self.n}, {self.second})^{self.p}"


@dataclass(frozen=True)
class DistinctSpectrum:
    """Eigenvalue and multiplicity per eigenspace V_0, V_1, ... (not sorted)."""

    params: GraphParams
    values: tuple
    multiplicities: tuple

    def __iter__(self):
        return iter(zip(self.values, self.multiplicities))

    def check(self):
        """Raise AssertionError if a structural invariant fails."""
        v, m = self.values, self.multiplicities
        assert all(v[0] > x for x in v[1:]), "V_0 eigenvalue is not strictly largest"
        assert min(v) < 0, "minimum eigenvalue is not negative"
        assert sum(m) == self.params.vertex_count, "multiplicities do not sum to |V|"
        assert sum(a * b for a, b in zip(v, m)) == 0, "trace is not zero"
        return self


def _tick(counter, key, amount=1):
    if counter is not None:
        counter[key] = counter.get(key, 0) + amount


def _params(family, n, q_or_k, p, clamp_p):
    if isinstance(n, GraphParams):
        if n.family != family:
            raise ParameterError(f"expected {family} parameters, got {n.family}")
        return n
    return GraphParams.make(family, n, q_or_k, p, clamp_p)


def hamming_spectrum(n, q=None, p=None, clamp_p=False, counter=None):
    params = _params("hamming", n, q, p, clamp_p)
    n, q, p = params.n, params.q, params.p
    krav = ones_row(n + 1)
    lam = [0] * (n + 1)
    for i in range(1, p + 1):
        _tick(counter, "outer")
        krav = kravchuk_row_next(krav, i, n, q, counter=counter)
        for t in range(n + 1):
            lam[t] += krav[t]
        _tick(counter, "acc", n + 1)
    mult = tuple(binom(n, t) * (q - 1) ** t for t in range(n + 1))
    return DistinctSpectrum(params, tuple(lam), mult)


def _johnson_multiplicities(n, m):
    return tuple(binom(n, j) - binom(n, j - 1) for j in range(m + 1))


def johnson_spectrum(n, k=None, p=None, clamp_p=False, counter=None):
    """Spectrum of J(n, k)^p.

    Only the eigenspaces V_0..V_m with m = min(k, n - k) exist; when 2k > n
    the recurrence still fills k + 1 slots but the trailing ones are dropped.
    """
    params = _params("johnson", n, k, p, clamp_p)
    n, k, p = params.n, params.k, params.p
    coeffs = EberleinCoeffs.build(n, k)
    prev, curr = ones_row(k + 1), None
    lam = [0] * (k + 1)
    for i in range(1, p + 1):
        _tick(counter, "outer")
        if i == 1:
            curr = eberlein_base_row(n, k, coeffs, counter=counter)
        else:
            prev, curr = curr, eberlein_row_next(prev, curr, i, n, k, coeffs, counter=counter)
        for j in range(k + 1):
            lam[j] += curr[j]
        _tick(counter, "acc", k + 1)
    m = min(k, n - k)
    return DistinctSpectrum(params, tuple(lam[: m + 1]), _johnson_multiplicities(n, m))


def kneser_delta(i, n, k):
    """Kneser distance between two k-sets at Johnson distance i."""
    if not (k >= 1 and n > 2 * k and 0 <= i <= k):
        raise ParameterError(f"kneser_delta needs 0 <= i <= k and n > 2k (got i={i}, n={n}, k={k})")
    d = n - 2 * k
    return min(2 * _ceil_div(i, d), 2 * _ceil_div(k - i, d) + 1)


def kneser_preimage(n, k, p):
    """Johnson distances i in 1..k whose Kneser distance lies in [1, p]."""
    diam = diameter("kneser", n, k)
    if not 1 <= p <= diam:
        raise ParameterError(f"p={p} is outside 1 <= p <= {diam} for K({n}, {k})")
    s = tuple(i for i in range(1, k + 1) if 1 <= kneser_delta(i, n, k) <= p)
    assert kneser_delta(0, n, k) == 0 and k in s
    return s


def kneser_spectrum(n, k=None, p=None, clamp_p=False, counter=None):
    params = _params("kneser", n, k, p, clamp_p)
    n, k, p = params.n, params.k, params.p
    selected = set(kneser_preimage(n, k, p))
    coeffs = EberleinCoeffs.build(n, k)
    prev, curr = ones_row(k + 1), None
    lam = [0] * (k + 1)
    # every degree up to k is needed to keep the recurrence going
    for i in range(1, k + 1):
        _tick(counter, "outer")
        if i == 1:
            curr = eberlein_base_row(n, k, coeffs, counter=counter)
        else:
            prev, curr = curr, eberlein_row_next(prev, curr, i, n, k, coeffs, counter=counter)
        if i in selected:
            for j in range(k + 1):
                lam[j] += curr[j]
            _tick(counter, "acc", k + 1)
    return DistinctSpectrum(params, tuple(lam), _johnson_multiplicities(n, k))


_SPECTRUM = {
    "hamming": hamming_spectrum,
    "johnson": johnson_spectrum,
    "kneser": kneser_spectrum,
}


def spectrum(params, counter=None):
    """Dispatch on ``params.family``."""
    return _SPECTRUM[params.family](params, counter=counter)
