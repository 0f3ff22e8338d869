"""Ground-truth computation by pruned exhaustive search.

``find_weighting`` returns the canonical (lexicographically smallest by
edge id, then weight value) proper weighting under optional constraints;
``mu_exact`` is the exact minimum alphabet size; ``end_edge_behavior``
enumerates every proper 2-weighting of a path and classifies what the
two end-edges may carry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product as iproduct

from . import _backend
from .graph import Graph, GraphError, connected_components, induced_subgraph, is_connected
from .weighting import EdgeWeighting

DEFAULT_K_MAX = 5  # best published general upper bound for connected graphs

# Practical desk-scale guards; exceed them only with force=True.
MAX_EDGES_K2 = 40
MAX_EDGES_K3 = 26


class SearchGuardError(RuntimeError):
    """Search refused: instance exceeds the desk-scale size guard."""


class NotFoundWithinCap(RuntimeError):
    """No proper weighting found for any k <= k_max.

    On a connected graph with k_max >= 5 this would contradict the
    published 5-bound and deserves loud attention, not a silent default.
    """


class InconsistentEndEdges(RuntimeError):
    """Observed end-edge weight pairs fit none of the three categories."""


class EndEdgeBehavior(Enum):
    SAME = "same"
    DIFFERENT = "different"
    FREE = "free"


@dataclass(frozen=True)
class SearchConstraints:
    """Optional constraints: pinned edge weights and vertex color parities.

    ``fixed_weights`` maps edge id -> weight; ``parity`` maps vertex ->
    'odd' or 'even'.
    """

    fixed_weights: dict = field(default_factory=dict)
    parity: dict = field(default_factory=dict)


def _bfs_edge_order(g: Graph):
    # edges in first-encountered order along a BFS from vertex 0, so
    # adjacent edges are assigned near each other and pruning bites early
    from collections import deque

    seen_v = [False] * g.n
    seen_e = [False] * g.m
    order = []
    seen_v[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u, eid in g.adjacency[v]:
            if not seen_e[eid]:
                seen_e[eid] = True
                order.append(eid)
            if not seen_v[u]:
                seen_v[u] = True
                queue.append(u)
    return order


def _prep(g: Graph):
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]
    adj_start = [0]
    adj_flat = []
    for v in range(g.n):
        adj_flat.extend(u for u, _ in g.adjacency[v])
        adj_start.append(len(adj_flat))
    return eu, ev, _bfs_edge_order(g), adj_start, adj_flat


def _constraint_arrays(g: Graph, k: int, cons: SearchConstraints):
    fixed = [0] * g.m
    for eid, w in cons.fixed_weights.items():
        if not (0 <= eid < g.m):
            raise ValueError(f"fixed weight on unknown edge id {eid}")
        if not (1 <= w <= k):
            raise ValueError(f"fixed weight {w} outside 1..{k}")
        fixed[eid] = w
    parity = [-1] * g.n
    for v, p in cons.parity.items():
        if not (0 <= v < g.n):
            raise ValueError(f"parity constraint on unknown vertex {v}")
        if p not in ("odd", "even"):
            raise ValueError(f"parity must be 'odd' or 'even', got {p!r}")
        parity[v] = 1 if p == "odd" else 0
    return fixed, parity


def _check_search_pre(g: Graph, k: int, force: bool):
    if k < 1:
        raise ValueError("k must be positive")
    if g.n < 3:
        raise GraphError("weighting search needs at least three vertices")
    if not is_connected(g):
        raise GraphError("weighting search requires a connected graph")
    if not force:
        if k == 2 and g.m > MAX_EDGES_K2:
            raise SearchGuardError(
                f"k=2 search on {g.m} edges exceeds the guard "
                f"({MAX_EDGES_K2}); pass force=True to override"
            )
        if k >= 3 and g.m > MAX_EDGES_K3:
            raise SearchGuardError(
                f"k={k} search on {g.m} edges exceeds the guard "
                f"({MAX_EDGES_K3}); pass force=True to override"
            )


def _exists(g: Graph, k: int, fixed, parity, prep):
    eu, ev, order, adj_start, adj_flat = prep
    return _backend.kernel.search_weighting(
        g.n, g.m, eu, ev, order, k, fixed, parity, adj_start, adj_flat
    )


def find_weighting(
    g: Graph,
    k: int,
    cons: SearchConstraints | None = None,
    force: bool = False,
):
    """Canonical proper k-weighting satisfying ``cons``, or None.

    The witness is the lexicographically smallest weight vector (by edge
    id, then weight value): each edge id in turn is pinned to the
    smallest weight that still leaves the instance satisfiable.
    """
    cons = cons or SearchConstraints()
    _check_search_pre(g, k, force)
    fixed, parity = _constraint_arrays(g, k, cons)
    prep = _prep(g)
    if _exists(g, k, fixed, parity, prep) is None:
        return None
    for eid in range(g.m):
        if fixed[eid]:
            continue
        for wt in range(1, k + 1):
            fixed[eid] = wt
            if _exists(g, k, fixed, parity, prep) is not None:
                break
        # the last tried weight is always feasible: a completion existed
        # before this edge was pinned
    return EdgeWeighting(k=k, weights=tuple(fixed))


def has_weighting(
    g: Graph,
    k: int,
    cons: SearchConstraints | None = None,
    force: bool = False,
) -> bool:
    """Existence-only variant of ``find_weighting`` (no canonicalization)."""
    cons = cons or SearchConstraints()
    _check_search_pre(g, k, force)
    fixed, parity = _constraint_arrays(g, k, cons)
    return _exists(g, k, fixed, parity, _prep(g)) is not None


def mu_exact(g: Graph, k_max: int = DEFAULT_K_MAX, force: bool = False) -> int:
    """Smallest k <= k_max admitting a proper weighting.

    Disconnected graphs take the maximum over components; components
    with fewer than three vertices are rejected.
    """
    comps = connected_components(g)
    if not comps:
        raise GraphError("mu is undefined for the empty graph")
    best = 0
    for comp in comps:
        if len(comp) < 3:
            raise GraphError(
                f"component {comp} has fewer than three vertices; "
                "mu is undefined"
            )
        sub = induced_subgraph(g, comp)[0] if len(comps) > 1 else g
        best = max(best, _mu_connected(sub, k_max, force))
    return best


def _mu_connected(g: Graph, k_max: int, force: bool) -> int:
    prep = _prep(g)
    no_parity = [-1] * g.n
    no_fixed = [0] * g.m
    for k in range(1, k_max + 1):
        _check_search_pre(g, k, force)
        if _exists(g, k, no_fixed, no_parity, prep) is not None:
            return k
    raise NotFoundWithinCap(
        f"no proper weighting with k <= {k_max} on a connected graph "
        f"(n={g.n}, m={g.m}); if k_max >= 5 this contradicts the "
        "published 5-bound -- please report this instance"
    )


def enumerate_path_weightings(n: int):
    """All proper 2-weightings of the path on n vertices (by full enumeration)."""
    m = n - 1
    out = []
    for ws in iproduct((1, 2), repeat=m):
        ok = True
        prev = ws[0]  # color of vertex 0
        for v in range(1, n):
            c = ws[v - 1] + (ws[v] if v < n - 1 else 0)
            if c == prev:
                ok = False
                break
            prev = c
        if ok:
            out.append(ws)
    return out


def end_edge_behavior(n: int) -> EndEdgeBehavior:
    """What the two end-edges of the path of length n (n edges) may carry.

    Enumerates every proper 2-weighting: SAME if the end-edges always
    agree, DIFFERENT if they always differ, FREE if all four weight
    pairs occur.  Any other observed pattern raises InconsistentEndEdges
    since it would falsify the claimed trichotomy.

    n counts edges: the trichotomy (same for n = 1 mod 4, different for
    n = 3 mod 4, free otherwise) holds for path length, not vertex
    count, as the length-3 path with weights 1,1,2 already shows.
    """
    if n < 4:
        raise ValueError("end-edge behavior needs a path with at least 4 edges")
    pairs = {(ws[0], ws[-1]) for ws in enumerate_path_weightings(n + 1)}
    equal = {(1, 1), (2, 2)}
    mixed = {(1, 2), (2, 1)}
    if pairs and pairs <= equal:
        return EndEdgeBehavior.SAME
    if pairs and pairs <= mixed:
        return EndEdgeBehavior.DIFFERENT
    if pairs == equal | mixed:
        return EndEdgeBehavior.FREE
    raise InconsistentEndEdges(
        f"proper 2-weightings of the {n}-vertex path realize end-edge "
        f"pairs {sorted(pairs)}, which fits no category"
    )
