import numpy as np
import pytest

from hoffbound import oracle
from hoffbound.errors import CapExceededError, NonConvergenceError, ParameterError
from hoffbound.oracle import (
    bfs_distances,
    build_power_adjacency,
    cluster_eigenvalues,
    colex_subsets,
    hamming_distance,
    hamming_vertices,
    johnson_distance,
    kneser_distance,
    symmetric_eigenvalues,
    verify,
)
from hoffbound.spectra import GraphParams, kneser_delta


@pytest.mark.parametrize("u,v,d", [("000", "000", 0), ("012", "010", 1), ("201", "012", 3)])
def test_hamming_distance(u, v, d):
    assert hamming_distance(u, v) == d


def test_hamming_distance_length_mismatch():
    with pytest.raises(ParameterError):
        hamming_distance("01", "012")


@pytest.mark.parametrize("a,b,d", [({1, 2}, {1, 2}, 0), ({1, 2}, {1, 3}, 1), ({1, 2, 3}, {4, 5, 6}, 3)])
def test_johnson_distance(a, b, d):
    assert johnson_distance(a, b) == d


def test_johnson_distance_size_mismatch():
    with pytest.raises(ParameterError):
        johnson_distance({1}, {1, 2})


def test_kneser_distance_examples():
    assert kneser_distance({1, 2}, {3, 4}, 5, 2) == 1
    assert kneser_distance({1, 2}, {1, 3}, 5, 2) == 2
    assert kneser_distance({1, 2}, {1, 3}, 5, 2) == kneser_delta(1, 5, 2)
    assert kneser_distance({1, 2}, {1, 2}, 5, 2) == 0
    # |A & B| = 1, Johnson distance 3 in K(9, 4)
    a, b = {1, 2, 3, 4}, {1, 5, 6, 7}
    assert kneser_distance(a, b, 9, 4) == kneser_delta(3, 9, 4) == 3
    subsets = [tuple(s) for s in colex_subsets(9, 4)]
    dist = bfs_distances(build_power_adjacency(GraphParams.kneser(9, 4, 1)))
    assert dist[subsets.index((1, 2, 3, 4)), subsets.index((1, 5, 6, 7))] == 3


def test_kneser_distance_param_errors():
    with pytest.raises(ParameterError):
        kneser_distance({1, 2}, {3, 4}, 4, 2)
    with pytest.raises(ParameterError):
        kneser_distance({1, 2}, {3, 9}, 5, 2)


def test_vertex_orders():
    assert [tuple(v) for v in hamming_vertices(2, 2)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert [tuple(s) for s in colex_subsets(4, 2)] == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


def test_adjacency_examples():
    c4 = build_power_adjacency(GraphParams.hamming(2, 2, 1))
    assert c4.tolist() == [[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]]
    pet = build_power_adjacency(GraphParams.kneser(5, 2, 1))
    assert pet.sum() // 2 == 15 and set(pet.sum(axis=1)) == {3}
    k6 = build_power_adjacency(GraphParams.johnson(4, 2, 2))
    assert (k6 == 1 - np.eye(6, dtype=np.uint8)).all()


def test_adjacency_matches_scalar_distances():
    params = GraphParams.kneser(7, 2, 1)
    subsets = [set(s) for s in colex_subsets(7, 2)]
    adj = build_power_adjacency(params)
    for i, a in enumerate(subsets):
        for j, b in enumerate(subsets):
            assert adj[i, j] == (1 <= kneser_distance(a, b, 7, 2) <= 1)
    params = GraphParams.hamming(3, 3, 2)
    verts = ["".join(map(str, v)) for v in hamming_vertices(3, 3)]
    adj = build_power_adjacency(params)
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            assert adj[i, j] == (1 <= hamming_distance(u, v) <= 2)


def test_adjacency_wide_ground_set_path():
    # n >= 64 uses element comparison instead of bit masks
    adj = build_power_adjacency(GraphParams.kneser(66, 2, 1))
    assert adj.shape == (2145, 2145)
    assert set(adj.sum(axis=1)) == {2016}  # C(64, 2)


def test_cap():
    with pytest.raises(CapExceededError) as info:
        build_power_adjacency(GraphParams.hamming(5, 2, 1), cap=16)
    assert info.value.vertex_count == 32


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv(oracle.CAP_ENV, "10")
    with pytest.raises(CapExceededError):
        build_power_adjacency(GraphParams.hamming(4, 2, 1))


def test_jacobi_examples():
    assert np.allclose(symmetric_eigenvalues([[0, 1], [1, 0]]), [-1, 1])
    q3 = symmetric_eigenvalues(build_power_adjacency(GraphParams.hamming(3, 2, 1)))
    assert np.allclose(q3, [-3, -1, -1, -1, 1, 1, 1, 3], atol=1e-9)
    pet = symmetric_eigenvalues(build_power_adjacency(GraphParams.kneser(5, 2, 1)))
    clusters = cluster_eigenvalues(pet)
    assert [v for v, _ in clusters] == pytest.approx([-2, 1, 3])
    assert [c for _, c in clusters] == [4, 5, 1]


def test_jacobi_against_lapack_random():
    rng = np.random.default_rng(7)
    for n in (1, 2, 3, 5, 8, 17, 40):
        m = rng.normal(size=(n, n))
        m = m + m.T
        assert np.allclose(symmetric_eigenvalues(m), np.linalg.eigvalsh(m), atol=1e-8)


def test_jacobi_permutation_invariance_and_trace():
    adj = build_power_adjacency(GraphParams.johnson(7, 3, 2))
    perm = np.random.default_rng(3).permutation(len(adj))
    a = symmetric_eigenvalues(adj)
    b = symmetric_eigenvalues(adj[np.ix_(perm, perm)])
    assert np.allclose(a, b, atol=1e-8)
    assert abs(a.sum()) <= 1e-6 * len(adj)


def test_jacobi_rejects_bad_input():
    with pytest.raises(ParameterError):
        symmetric_eigenvalues([[0, 1], [0, 0]])
    with pytest.raises(ParameterError):
        symmetric_eigenvalues([[0, 1], [1, 0]], tol=0)


def test_jacobi_non_convergence():
    with pytest.raises(NonConvergenceError):
        symmetric_eigenvalues(np.ones((4, 4)) - np.eye(4), max_sweeps=0)


def test_cluster_eigenvalues():
    clusters = cluster_eigenvalues([1.0, 1.0 + 1e-9, -2.0, 3.0])
    assert [v for v, _ in clusters] == pytest.approx([-2, 1, 3])
    assert [c for _, c in clusters] == [1, 2, 1]


@pytest.mark.parametrize(
    "params,values",
    [
        (GraphParams.hamming(4, 2, 2), (10, 2, -2, -2, 2)),
        (GraphParams.kneser(5, 2, 1), (3, -2, 1)),
        (GraphParams.johnson(6, 3, 2), (18, 0, -2, 0)),
        (GraphParams.kneser(9, 4, 2), (25, 7, 7, -3, -3)),
        (GraphParams.johnson(7, 5, 2), (20, -1, -1)),
    ],
)
def test_verify_examples(params, values):
    rep = verify(params)
    assert rep.matched and rep.rows_match
    assert rep.dp_values == values
    assert rep.max_abs_deviation < 1e-6


def test_verify_reports_mismatch(monkeypatch):
    from hoffbound.spectra import DistinctSpectrum

    def wrong(params):
        return DistinctSpectrum(params, (3, -2, 2), (1, 4, 5))

    monkeypatch.setattr(oracle, "spectrum", wrong)
    rep = verify(GraphParams.kneser(5, 2, 1))
    assert not rep.matched


def test_verify_cache_reuses_identical_graphs():
    cache = {}
    verify(GraphParams.hamming(1, 6, 1), cache=cache)
    verify(GraphParams.johnson(6, 1, 1), cache=cache)
    verify(GraphParams.kneser(6, 1, 1), cache=cache)
    assert len(cache) == 1


def test_bfs_distances_path_graph():
    path = np.zeros((4, 4), dtype=np.uint8)
    for i in range(3):
        path[i, i + 1] = path[i + 1, i] = 1
    d = bfs_distances(path)
    assert d[0].tolist() == [0, 1, 2, 3]
    two = np.zeros((2, 2), dtype=np.uint8)
    assert bfs_distances(two).tolist() == [[0, -1], [-1, 0]]


def test_kneser_formula_matches_bfs_small():
    for k in range(1, 4):
        for n in range(2 * k + 1, 2 * k + 5):
            params = GraphParams.kneser(n, k, 1)
            bfs = bfs_distances(build_power_adjacency(params))
            assert (bfs == oracle.distance_matrix(params)).all()


def test_johnson_distance_matrix_matches_bfs():
    for n, k in [(5, 2), (6, 3), (7, 4), (8, 2)]:
        params = GraphParams.johnson(n, k, 1)
        bfs = bfs_distances(build_power_adjacency(params))
        assert (bfs == oracle.distance_matrix(params)).all()


@pytest.mark.parametrize("m", [2, 4, 6, 10, 32])
def test_round_moves_pair_every_index_once(m):
    from hoffbound._jacobi import round_moves

    dest = round_moves(m)
    order = np.arange(m)
    seen = set()
    for _ in range(m - 1):
        seen.update(frozenset(order[2 * i: 2 * i + 2]) for i in range(m // 2))
        moved = np.empty_like(order)
        moved[dest] = order
        order = moved
    assert len(seen) == m * (m - 1) // 2
    assert (order == np.arange(m)).all()


def test_jacobi_odd_order_padding():
    rng = np.random.default_rng(11)
    m = rng.normal(size=(7, 7)) + 50
    m = m + m.T
    assert np.allclose(symmetric_eigenvalues(m), np.linalg.eigvalsh(m), atol=1e-8)


@pytest.mark.parametrize("n,k", [(9, 3), (70, 1), (66, 2), (66, 64), (65, 64)])
def test_intersection_matrix_paths_agree_with_sets(n, k):
    from hoffbound.oracle import intersection_matrix

    subsets = colex_subsets(n, k)
    idx = np.random.default_rng(n * k).integers(0, len(subsets), size=(200, 2))
    inter = intersection_matrix(subsets, n)
    for a, b in idx:
        assert inter[a, b] == len(set(subsets[a]) & set(subsets[b]))
