import pytest

import vcew._backend as backend
import vcew._kernel_py as kernel_py
from vcew.families import clique_graph, cycle_graph, path_graph, theta_graph
from vcew.graph import Graph, GraphError
from vcew.oracle import (
    EndEdgeBehavior,
    NotFoundWithinCap,
    SearchConstraints,
    SearchGuardError,
    end_edge_behavior,
    enumerate_path_weightings,
    find_weighting,
    has_weighting,
    mu_exact,
)
from vcew.weighting import induced_coloring, is_proper

try:
    import vcew._kernel as kernel_c

    KERNELS = [kernel_py, kernel_c]
except ImportError:  # compiled extension unavailable
    KERNELS = [kernel_py]


@pytest.fixture(params=KERNELS, ids=lambda k: k.BACKEND_NAME)
def any_backend(request, monkeypatch):
    monkeypatch.setattr(backend, "kernel", request.param)
    return request.param.BACKEND_NAME


MU_CASES = [
    (path_graph(3), 1),
    (path_graph(4), 2),
    (cycle_graph(4), 2),
    (cycle_graph(5), 3),
    (cycle_graph(6), 3),
    (cycle_graph(8), 2),
    (clique_graph(4), 3),
    (theta_graph([1, 5, 5]), 3),
    (theta_graph([2, 2, 2]), 1),
]


def test_mu_exact_known_values(any_backend):
    for g, expected in MU_CASES:
        assert mu_exact(g) == expected


def test_find_weighting_is_canonical_and_proper(any_backend):
    g = cycle_graph(4)
    w = find_weighting(g, 2)
    assert w.weights == (1, 1, 2, 2)
    assert is_proper(g, w)
    assert find_weighting(g, 1) is None


def test_find_weighting_lex_minimality(any_backend):
    g = cycle_graph(8)
    w = find_weighting(g, 2)
    # no weighting with a lexicographically smaller prefix exists
    for eid in range(g.m):
        for smaller in range(1, w.weights[eid]):
            fixed = {e: w.weights[e] for e in range(eid)}
            fixed[eid] = smaller
            assert not has_weighting(g, 2, SearchConstraints(fixed_weights=fixed))


def test_constraints_fixed_and_parity(any_backend):
    g = path_graph(5)
    w = find_weighting(g, 2, SearchConstraints(fixed_weights={0: 2}))
    assert w.weights[0] == 2
    assert is_proper(g, w)
    parity = {v: "odd" for v in range(5)}
    assert not has_weighting(g, 2, SearchConstraints(parity=parity))
    w2 = find_weighting(g, 2, SearchConstraints(parity={0: "odd"}))
    assert induced_coloring(g, w2).colors[0] % 2 == 1


def test_mu_exact_component_rules(any_backend):
    two_paths = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert mu_exact(two_paths) == 1
    mixed = Graph(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6)])
    assert mu_exact(mixed) == 3
    with pytest.raises(GraphError):
        mu_exact(Graph(4, [(0, 1), (1, 2), (2, 0)]))  # isolated vertex


def test_search_preconditions(any_backend):
    with pytest.raises(GraphError):
        has_weighting(Graph(2, [(0, 1)]), 2)
    with pytest.raises(GraphError):
        has_weighting(Graph(4, [(0, 1), (2, 3)]), 2)
    with pytest.raises(ValueError):
        has_weighting(path_graph(3), 0)


def test_search_guard(any_backend):
    big = clique_graph(10)  # 45 edges
    with pytest.raises(SearchGuardError):
        has_weighting(big, 2)
    with pytest.raises(SearchGuardError):
        has_weighting(clique_graph(8), 3)  # 28 edges > k>=3 guard


def test_not_found_within_cap(any_backend):
    with pytest.raises(NotFoundWithinCap):
        mu_exact(cycle_graph(6), k_max=2)


def test_backends_agree_on_witnesses():
    if len(KERNELS) < 2:
        pytest.skip("compiled kernel unavailable")
    for g, _ in MU_CASES:
        results = []
        for kern in KERNELS:
            backend_saved = backend.kernel
            backend.kernel = kern
            try:
                results.append(
                    (mu_exact(g), find_weighting(g, mu_exact(g)).weights)
                )
            finally:
                backend.kernel = backend_saved
        assert results[0] == results[1]


def test_enumerate_path_weightings_counts():
    # all 2^(n-1) assignments filtered to proper ones
    assert len(enumerate_path_weightings(3)) == 4
    assert len(enumerate_path_weightings(4)) == 4
    for n in range(3, 10):
        found = enumerate_path_weightings(n)
        assert len(set(found)) == len(found)
        assert all(len(ws) == n - 1 for ws in found)


def test_end_edge_behavior_trichotomy():
    assert end_edge_behavior(5) is EndEdgeBehavior.SAME
    assert end_edge_behavior(7) is EndEdgeBehavior.DIFFERENT
    assert end_edge_behavior(6) is EndEdgeBehavior.FREE
    assert end_edge_behavior(8) is EndEdgeBehavior.FREE
    with pytest.raises(ValueError):
        end_edge_behavior(3)
