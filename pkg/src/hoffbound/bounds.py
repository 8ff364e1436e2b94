"""Hoffman lower bounds on the chromatic number, plus known reference values."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import MalformedSpectrumError, ParameterError
from .numerics import ceil_rational
from .spectra import (
    DistinctSpectrum,
    GraphParams,
    hamming_spectrum,
    johnson_spectrum,
    kneser_spectrum,
    spectrum,
)

CLIQUE_LABEL = "clique bound (as printed)"


@dataclass(frozen=True)
class ReferenceValues:
    chi_exact: Optional[int] = None
    omega_or_clique_bound: Optional[int] = None
    source: str = ""

    def __bool__(self):
        return self.chi_exact is not None or self.omega_or_clique_bound is not None

    def as_dict(self):
        out = {}
        if self.chi_exact is not None:
            out["chi_exact"] = self.chi_exact
        if self.omega_or_clique_bound is not None:
            out["omega_or_clique_bound"] = self.omega_or_clique_bound
        if out:
            out["source"] = self.source
        return out


@dataclass(frozen=True)
class BoundReport:
    params: GraphParams
    lambda_max: int
    lambda_min: int
    argmin_index: int
    bound: Fraction
    bound_ceil: int
    references: Optional[ReferenceValues] = None
    spectrum: Optional[DistinctSpectrum] = None


def hoffman(spec: DistinctSpectrum, with_references=True) -> BoundReport:
    """1 + lambda_max / -lambda_min over a distinct spectrum.

    lambda_max is the V_0 eigenvalue; lambda_min is taken over V_1.. with ties
    going to the smallest index.
    """
    values = spec.values
    if len(values) < 2:
        raise MalformedSpectrumError("spectrum needs at least two eigenspaces")
    lam_max = values[0]
    if any(v >= lam_max for v in values[1:]):
        raise MalformedSpectrumError("V_0 eigenvalue is not strictly the largest")
    argmin = min(range(1, len(values)), key=lambda t: (values[t], t))
    lam_min = values[argmin]
    if lam_min >= 0:
        raise MalformedSpectrumError(f"minimum eigenvalue {lam_min} is not negative")
    bound = 1 + Fraction(lam_max, -lam_min)
    refs = reference_values(spec.params) if with_references else None
    return BoundReport(
        spec.params, lam_max, lam_min, argmin, bound, ceil_rational(bound), refs or None, spec
    )


def bound_hamming(n, q, p, clamp_p=False):
    return hoffman(hamming_spectrum(n, q, p, clamp_p=clamp_p))


def bound_johnson(n, k, p, clamp_p=False):
    return hoffman(johnson_spectrum(n, k, p, clamp_p=clamp_p))


def bound_kneser(n, k, p, clamp_p=False):
    return hoffman(kneser_spectrum(n, k, p, clamp_p=clamp_p))


def bound(params: GraphParams) -> BoundReport:
    return hoffman(spectrum(params))


def hypercube_clique_bound(n, p):
    """Clique number of Q_n^p by the published formula, odd branch included
    exactly as printed (it gives 1 at p = 1, although omega(Q_n) = 2)."""
    if not 1 <= p <= n:
        raise ParameterError(f"hypercube_clique_bound needs 1 <= p <= n (got n={n}, p={p})")
    if p % 2 == 0:
        top, m = n, p // 2
    else:
        top, m = n - 1, (p - 1) // 2
    c, total = 1, 1
    for i in range(1, m + 1):
        c = c * (top - i + 1) // i
        total += c
    return total


def reference_values(params: GraphParams) -> ReferenceValues:
    fam, n, p = params.family, params.n, params.p
    if fam == "hamming":
        chi = params.q if p == 1 else None
        clique = hypercube_clique_bound(n, p) if params.q == 2 else None
        sources = []
        if chi is not None:
            sources.append("chi(H(n,q)) = q")
        if clique is not None:
            sources.append(CLIQUE_LABEL)
        return ReferenceValues(chi, clique, "; ".join(sources))
    if p != 1:
        return ReferenceValues()
    k = params.k
    if fam == "johnson":
        return ReferenceValues(None, max(k + 1, n - k + 1), "omega(J(n,k)) = max{k+1, n-k+1}")
    return ReferenceValues(n - 2 * k + 2, None, "chi(K(n,k)) = n - 2k + 2")
