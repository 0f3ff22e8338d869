import random

from hypothesis import given, settings, strategies as st

from vcew.families import random_connected_bipartite
from vcew.graph import Graph, bipartition, is_connected, maximal_simple_paths
from vcew.oracle import find_weighting, has_weighting
from vcew.weighting import EdgeWeighting, induced_coloring, is_proper


def connected_graph(seed: int, n: int, extra: int) -> Graph:
    """Random spanning tree plus extra chords, deterministic in seed."""
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        edges.add(tuple(sorted((v, rng.randrange(v)))))
    candidates = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra])
    return Graph(n, sorted(edges))


graph_params = st.tuples(
    st.integers(min_value=0, max_value=10_000),
    st.integers(min_value=3, max_value=9),
    st.integers(min_value=0, max_value=5),
)


@settings(max_examples=60, deadline=None)
@given(graph_params, st.integers(min_value=0, max_value=10_000))
def test_color_sum_identity(params, wseed):
    g = connected_graph(*params)
    rng = random.Random(wseed)
    w = EdgeWeighting(
        k=3, weights=tuple(rng.randint(1, 3) for _ in range(g.m))
    )
    coloring = induced_coloring(g, w)
    assert sum(coloring.colors) == 2 * sum(w.weights)
    for v in range(g.n):
        assert coloring.colors[v] == sum(
            w.weights[eid] for _, eid in g.adjacency[v]
        )


@settings(max_examples=40, deadline=None)
@given(graph_params)
def test_find_weighting_deterministic_and_proper(params):
    g = connected_graph(*params)
    if g.m > 18:
        return
    first = find_weighting(g, 3)
    second = find_weighting(g, 3)
    assert first == second
    if first is not None:
        assert is_proper(g, first)
        # the witness is consistent with the existence query
        assert has_weighting(g, 3)


@settings(max_examples=60, deadline=None)
@given(graph_params)
def test_msp_edge_partition(params):
    g = connected_graph(*params)
    decomp = maximal_simple_paths(g)
    covered = sorted(e for p in decomp.paths for e in p.edge_ids)
    assert covered == list(range(g.m))
    for p in decomp.paths:
        # closed paths repeat their base vertex at both ends
        for v in p.vertices[1:-1]:
            assert g.degrees[v] == 2
        # consecutive vertices are joined by the listed edges
        for (a, b), eid in zip(
            zip(p.vertices, p.vertices[1:]), p.edge_ids
        ):
            assert tuple(sorted((a, b))) == g.edges[eid]


@settings(max_examples=50, deadline=None)
@given(
    st.integers(min_value=3, max_value=12),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=10_000),
)
def test_random_connected_bipartite_contract(n, slack, seed):
    m_max = (n // 2) * ((n + 1) // 2)
    m = min(n - 1 + slack, m_max)
    g = random_connected_bipartite(n, m, seed)
    assert (g.n, g.m) == (n, m)
    assert is_connected(g)
    assert bipartition(g) is not None
    again = random_connected_bipartite(n, m, seed)
    assert again.edges == g.edges
