"""Brute-force ground truth for the recurrence spectra.

Builds the explicit power graph, diagonalises its adjacency matrix with a
cyclic Jacobi eigensolver and compares eigenvalue clusters against the
distinct spectrum from :mod:`hoffbound.spectra`. Vertex orders are fixed
(lexicographic q-ary strings, colexicographic k-subsets) so the matrices are
reproducible bit for bit.
"""
import hashlib
import itertools
import os
from dataclasses import dataclass, field

import numpy as np

from . import _jacobi
from .errors import CapExceededError, NonConvergenceError, ParameterError
from .polynomials import eberlein_direct, eberlein_rows, kravchuk_direct, kravchuk_rows
from .spectra import GraphParams, spectrum

DEFAULT_CAP = 4096
CAP_ENV = "HOFFBOUND_ORACLE_CAP"
JACOBI_TOL = 1e-10
CLUSTER_TOL = 1e-6
MAX_SWEEPS = 100


def oracle_cap():
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


# -- vertex distances -------------------------------------------------------

def hamming_distance(u, v):
    if len(u) != len(v):
        raise ParameterError(f"strings of lengths {len(u)} and {len(v)} have no Hamming distance")
    return sum(a != b for a, b in zip(u, v))


def johnson_distance(a, b):
    a, b = set(a), set(b)
    if len(a) != len(b):
        raise ParameterError(f"subsets of sizes {len(a)} and {len(b)} are not in one Johnson graph")
    return len(a) - len(a & b)


def _kneser_from_intersection(x, n, k):
    d = n - 2 * k
    return np.minimum(2 * (-((x - k) // d)), 2 * (-(-x // d)) + 1)


def kneser_distance(a, b, n, k):
    """Shortest-path distance in K(n, k) from the intersection size alone."""
    a, b = set(a), set(b)
    if not (k >= 1 and n > 2 * k):
        raise ParameterError(f"kneser_distance needs n > 2k >= 2 (got n={n}, k={k})")
    if len(a) != k or len(b) != k or not (a | b) <= set(range(1, n + 1)):
        raise ParameterError(f"arguments must be {k}-subsets of 1..{n}")
    x = len(a & b)
    d = n - 2 * k
    return min(2 * -(-(k - x) // d), 2 * -(-x // d) + 1)


# -- vertex sets and distance matrices ---------------------------------------

def hamming_vertices(n, q):
    """All q-ary strings of length n in lexicographic order, shape (q^n, n)."""
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int32).reshape(-1, n)


def colex_subsets(n, k):
    """All k-subsets of 1..n in colexicographic order, shape (C(n,k), k)."""
    subsets = sorted(itertools.combinations(range(1, n + 1), k), key=lambda s: s[::-1])
    return np.array(subsets, dtype=np.int32).reshape(-1, k)


def hamming_distance_matrix(vertices):
    dist = np.zeros((len(vertices),) * 2, dtype=np.int32)
    for col in vertices.T:
        dist += col[:, None] != col[None, :]
    return dist


def intersection_matrix(subsets, n):
    """|A & B| for every pair of rows of ``subsets``."""
    count, k = subsets.shape
    if n < 64:
        masks = np.zeros(count, dtype=np.uint64)
        for col in subsets.T:
            masks |= np.left_shift(np.uint64(1), (col - 1).astype(np.uint64))
        return np.bitwise_count(masks[:, None] & masks[None, :]).astype(np.int32)
    if 16 * k * k <= n:
        # few elements per subset: compare them pairwise
        inter = np.zeros((count, count), dtype=np.int32)
        for s in range(k):
            for t in range(k):
                inter += subsets[:, s, None] == subsets[None, :, t]
        return inter
    # incidence rows; float32 products of 0/1 entries are exact for n < 2^24
    incidence = np.zeros((count, n), dtype=np.float32)
    np.put_along_axis(incidence, subsets.astype(np.int64) - 1, 1.0, axis=1)
    return (incidence @ incidence.T).astype(np.int32)


def distance_matrix(params):
    """Base-graph distances between every pair of vertices of ``params``."""
    if params.family == "hamming":
        return hamming_distance_matrix(hamming_vertices(params.n, params.q))
    x = intersection_matrix(colex_subsets(params.n, params.k), params.n)
    if params.family == "johnson":
        return params.k - x
    return _kneser_from_intersection(x, params.n, params.k).astype(np.int32)


def build_power_adjacency(params: GraphParams, cap=None):
    """0/1 adjacency matrix of the graph power: d(u, v) in [1, p]."""
    cap = oracle_cap() if cap is None else cap
    count = params.vertex_count
    if count > cap:
        raise CapExceededError(count, cap)
    dist = distance_matrix(params)
    return ((dist >= 1) & (dist <= params.p)).astype(np.uint8)


def bfs_distances(adj):
    """All-pairs shortest-path lengths by level-synchronous breadth-first
    search from every source at once; -1 marks unreachable pairs."""
    adj = np.asarray(adj)
    count = adj.shape[0]
    step = adj.astype(bool)
    dist = np.full((count, count), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    reached = np.eye(count, dtype=bool)
    frontier = reached
    level = 0
    step32 = None
    while not reached.all():
        level += 1
        if level == 1:
            new = step & ~reached
        else:
            if step32 is None:
                step32 = step.astype(np.float32)
            new = (frontier.astype(np.float32) @ step32 > 0) & ~reached
        if not new.any():
            break
        dist[new] = level
        reached |= new
        frontier = new
    return dist


# -- eigenvalues ---------------------------------------------------------------

def symmetric_eigenvalues(m, tol=JACOBI_TOL, max_sweeps=MAX_SWEEPS):
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
    sorted ascending.

    Sweeps stop once the off-diagonal Frobenius norm drops to ``tol`` times
    the Frobenius norm of the whole matrix. Pivots already below that target
    divided by the order are skipped (threshold Jacobi); if every pivot is
    that small the stopping test holds, so skipping never stalls a sweep.
    """
    a = np.array(m, dtype=np.float64, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1] or not np.array_equal(a, a.T):
        raise ParameterError("symmetric_eigenvalues needs a square symmetric matrix")
    if tol <= 0:
        raise ParameterError("tol must be positive")
    n = a.shape[0]
    if n < 2:
        return np.diag(a).copy()
    limit = tol * np.linalg.norm(a)
    # odd orders get an isolated padding index; its row stays exactly zero
    size = n + n % 2
    work = np.zeros((size, size))
    work[:n, :n] = a
    scratch = np.empty_like(work)
    order = np.arange(size)
    for _ in range(max_sweeps):
        if _jacobi.offdiag_norm(work) <= limit:
            break
        _jacobi.jacobi_sweep(work, scratch, order, limit / n)
        work, scratch = scratch, work
    else:
        if _jacobi.offdiag_norm(work) > limit:
            raise NonConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    diag = np.empty(size)
    diag[order] = np.diag(work)
    return np.sort(diag[:n])


def cluster_eigenvalues(eigenvalues, tol=CLUSTER_TOL):
    """Group sorted eigenvalues whose neighbours lie within ``tol``; returns
    (mean, count) per group."""
    clusters = []
    group = []
    for x in np.sort(np.asarray(eigenvalues, dtype=float)):
        if group and x - group[-1] > tol:
            clusters.append((float(np.mean(group)), len(group)))
            group = []
        group.append(x)
    if group:
        clusters.append((float(np.mean(group)), len(group)))
    return clusters


# -- closed-form cross checks ------------------------------------------------

def direct_spectrum_values(params):
    """Eigenvalues of the power from the defining polynomial sums only."""
    fam, n, p = params.family, params.n, params.p
    if fam == "hamming":
        return tuple(
            sum(kravchuk_direct(i, t, n, params.q) for i in range(1, p + 1)) for t in range(n + 1)
        )
    k = params.k
    if fam == "johnson":
        degrees = range(1, p + 1)
        m = min(k, n - k)
    else:
        from .spectra import kneser_preimage

        degrees = kneser_preimage(n, k, p)
        m = k
    return tuple(sum(eberlein_direct(i, j, n, k) for i in degrees) for j in range(m + 1))


def rows_match_direct(params):
    """Recurrence rows equal the defining sums for every degree the DP uses."""
    fam, n = params.family, params.n
    if fam == "hamming":
        return all(
            row[t] == kravchuk_direct(row.degree, t, n, params.q)
            for row in kravchuk_rows(n, params.q, params.p)
            for t in range(n + 1)
        )
    k = params.k
    top = params.p if fam == "johnson" else k
    m = min(k, n - k)
    return all(
        row[j] == eberlein_direct(row.degree, j, n, k)
        for row in eberlein_rows(n, k, top)
        for j in range(m + 1)
    )


@dataclass
class VerificationReport:
    params: GraphParams
    dp_values: tuple
    dp_multiplicities: tuple
    oracle_clusters: list
    max_abs_deviation: float
    rows_match: bool
    matched: bool
    expected: list = field(default_factory=list)

    def summary(self):
        return "matched" if self.matched else "MISMATCH"


def _merged(values, mults):
    merged = {}
    for v, m in zip(values, mults):
        merged[v] = merged.get(v, 0) + m
    return sorted((v, m) for v, m in merged.items() if m)


def verify(params: GraphParams, tol=CLUSTER_TOL, cap=None, cache=None):
    """Compare the recurrence spectrum of ``params`` with brute force.

    ``cache`` may be a dict reused across calls; it maps adjacency-matrix
    digests to their eigenvalues so identical graphs are diagonalised once.
    """
    spec = spectrum(params)
    adj = build_power_adjacency(params, cap)
    key = (adj.shape, hashlib.sha1(adj.tobytes()).hexdigest())
    if cache is not None and key in cache:
        eig = cache[key]
    else:
        eig = symmetric_eigenvalues(adj)
        if cache is not None:
            cache[key] = eig
    clusters = cluster_eigenvalues(eig, tol)
    expected = _merged(spec.values, spec.multiplicities)
    targets = np.array([v for v, _ in expected], dtype=float)
    deviation = float(np.max(np.min(np.abs(eig[:, None] - targets[None, :]), axis=1)))
    same = len(clusters) == len(expected) and all(
        abs(c - v) <= tol and cnt == m for (c, cnt), (v, m) in zip(clusters, expected)
    )
    rows_ok = rows_match_direct(params) and direct_spectrum_values(params) == spec.values
    return VerificationReport(
        params, spec.values, spec.multiplicities, clusters, deviation, rows_ok, same and rows_ok, expected
    )
