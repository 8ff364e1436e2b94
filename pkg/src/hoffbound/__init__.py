"""Hoffman spectral lower bounds on the chromatic number of Hamming, Johnson
and Kneser graph powers, computed exactly from polynomial recurrences."""
from .bounds import (
    BoundReport,
    ReferenceValues,
    bound,
    bound_hamming,
    bound_johnson,
    bound_kneser,
    hoffman,
    hypercube_clique_bound,
    reference_values,
)
from .errors import (
    CapExceededError,
    DegreeMismatchError,
    HoffboundError,
    MalformedSpectrumError,
    NonConvergenceError,
    ParameterError,
)
from .spectra import (
    DistinctSpectrum,
    GraphParams,
    diameter,
    hamming_spectrum,
    johnson_spectrum,
    kneser_delta,
    kneser_preimage,
    kneser_spectrum,
    spectrum,
)

__version__ = "0.1.0"
