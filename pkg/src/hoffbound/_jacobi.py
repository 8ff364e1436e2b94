"""Compiled kernels for the cyclic Jacobi eigensolver.

Rotations follow the round-robin (circle method) ordering: each round pairs
every index with exactly one partner, so the rotations of a round commute and
are applied together. The matrix is kept physically permuted so that the
pairs of the current round sit at positions (2i, 2i+1). Moving to the next
round only shifts every index to a neighbouring pair, so each 2x2 block is
read contiguously, rotated on both sides and written straight into its place
for the next round.
"""
import numba
import numpy as np


@numba.njit(cache=True)
def _slot(j, m):
    """Position of circle-method seat ``j`` in the paired layout."""
    h = m // 2
    return 2 * j if j < h else 2 * (m - 1 - j) + 1


@numba.njit(cache=True)
def round_moves(m):
    """dest[pos]: where the index at ``pos`` goes for the next round (m even).

    Seat 0 is fixed and the other seats rotate by one, so m - 1 rounds pair
    every two indices exactly once and then restore the starting layout.
    """
    dest = np.empty(m, np.int64)
    for j in range(m):
        nxt = 0 if j == 0 else (1 if j == m - 1 else j + 1)
        dest[_slot(j, m)] = _slot(nxt, m)
    return dest


@numba.njit(cache=True)
def offdiag_norm(a):
    n = a.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i, j] * a[i, j]
    return np.sqrt(s)


@numba.njit(cache=True, fastmath=True)
def jacobi_sweep(a, b, order, thresh):
    """One cyclic sweep over all index pairs of the even-order matrix ``a``.

    Rotations whose pivot is at most ``thresh`` in magnitude are skipped.
    ``b`` is scratch space of the same shape; ``order[pos]`` tracks which
    original index sits at each position. The m - 1 rounds alternate between
    the two buffers, so the result always ends up in ``b``. Returns the
    number of rotations applied.
    """
    m = a.shape[0]
    h = m // 2
    dest = round_moves(m)
    c = np.empty(h)
    s = np.empty(h)
    moved = np.empty_like(order)
    rotations = 0
    for _ in range(m - 1):
        for i in range(h):
            p = 2 * i
            q = p + 1
            apq = a[p, q]
            c[i] = 1.0
            s[i] = 0.0
            if abs(apq) <= thresh:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            sgn = 1.0 if theta >= 0.0 else -1.0
            t = sgn / (abs(theta) + np.sqrt(theta * theta + 1.0))
            c[i] = 1.0 / np.sqrt(t * t + 1.0)
            s[i] = t * c[i]
            rotations += 1
        for i in range(h):
            p = 2 * i
            q = p + 1
            ci = c[i]
            si = s[i]
            dp = dest[p]
            dq = dest[q]
            for j in range(h):
                u = 2 * j
                v = u + 1
                cj = c[j]
                sj = s[j]
                x_pu = ci * a[p, u] - si * a[q, u]
                x_qu = si * a[p, u] + ci * a[q, u]
                x_pv = ci * a[p, v] - si * a[q, v]
                x_qv = si * a[p, v] + ci * a[q, v]
                du = dest[u]
                dv = dest[v]
                b[dp, du] = cj * x_pu - sj * x_pv
                b[dp, dv] = sj * x_pu + cj * x_pv
                b[dq, du] = cj * x_qu - sj * x_qv
                b[dq, dv] = sj * x_qu + cj * x_qv
        for i in range(h):
            if s[i] != 0.0:
                b[dest[2 * i], dest[2 * i + 1]] = 0.0
                b[dest[2 * i + 1], dest[2 * i]] = 0.0
        for pos in range(m):
            moved[dest[pos]] = order[pos]
        order[:] = moved
        a, b = b, a
    return rotations
