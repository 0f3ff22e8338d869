"""Pure-Python hot kernels: weighting search and vertex connectivity.

This is the fallback twin of the compiled extension ``vcew._kernel``;
both expose the same two functions and must return identical results.
The compiled module is preferred at import (see ``vcew._backend``).
"""

from __future__ import annotations

from collections import deque

BACKEND_NAME = "python"


def search_weighting(n, m, eu, ev, order, k, fixed, parity, adj_start, adj_flat):
    """Backtracking search for a proper edge weighting.

    Edges are assigned in ``order``; weight values are tried in
    ascending order, so the first hit is the lexicographically smallest
    weighting with respect to ``order``.  A partial assignment is pruned
    as soon as a vertex with all incident edges assigned conflicts with
    a saturated neighbor or violates its parity constraint.

    fixed[e] > 0 pins edge e to that weight; parity[v] in {-1, 0, 1}
    requires no constraint / an even color / an odd color at v.

    Returns a per-edge-id weight list, or None.
    """
    if m == 0:
        return []
    w = [0] * m
    rem = [adj_start[v + 1] - adj_start[v] for v in range(n)]
    csum = [0] * n
    cur = [0] * m

    def saturated_ok(x):
        cx = csum[x]
        if parity[x] >= 0 and (cx & 1) != parity[x]:
            return False
        for i in range(adj_start[x], adj_start[x + 1]):
            y = adj_flat[i]
            if rem[y] == 0 and csum[y] == cx:
                return False
        return True

    def try_assign(e, wt):
        u = eu[e]
        v = ev[e]
        w[e] = wt
        csum[u] += wt
        csum[v] += wt
        rem[u] -= 1
        rem[v] -= 1
        if (rem[u] == 0 and not saturated_ok(u)) or (
            rem[v] == 0 and not saturated_ok(v)
        ):
            w[e] = 0
            csum[u] -= wt
            csum[v] -= wt
            rem[u] += 1
            rem[v] += 1
            return False
        return True

    pos = 0
    while True:
        e = order[pos]
        prev = cur[pos]
        if prev:
            u = eu[e]
            v = ev[e]
            w[e] = 0
            csum[u] -= prev
            csum[v] -= prev
            rem[u] += 1
            rem[v] += 1
        f = fixed[e]
        chosen = 0
        if f:
            if prev == 0 and try_assign(e, f):
                chosen = f
        else:
            wt = prev + 1
            while wt <= k:
                if try_assign(e, wt):
                    chosen = wt
                    break
                wt += 1
        if chosen:
            cur[pos] = chosen
            pos += 1
            if pos == m:
                return list(w)
        else:
            cur[pos] = 0
            pos -= 1
            if pos < 0:
                return None


def vertex_connectivity(n, adj_start, adj_flat):
    """Vertex connectivity of a connected non-complete graph.

    Unit vertex capacities via node splitting; max-flow from a fixed
    min-degree vertex to each of its non-neighbors and between
    non-adjacent pairs of its neighbors, with early cutoff at the
    current best value.
    """
    deg = [adj_start[v + 1] - adj_start[v] for v in range(n)]
    neighbors = [
        frozenset(adj_flat[adj_start[v]:adj_start[v + 1]]) for v in range(n)
    ]
    v0 = min(range(n), key=lambda v: deg[v])
    best = deg[v0]
    pairs = [(v0, t) for t in range(n) if t != v0 and t not in neighbors[v0]]
    nb = sorted(neighbors[v0])
    for i in range(len(nb)):
        for j in range(i + 1, len(nb)):
            if nb[j] not in neighbors[nb[i]]:
                pairs.append((nb[i], nb[j]))
    for s, t in pairs:
        if best == 0:
            break
        best = min(best, _local_connectivity(n, neighbors, s, t, best))
    return best


def _local_connectivity(n, neighbors, s, t, cutoff):
    # split vertex v into in-node v and out-node v + n
    big = n + 1
    graph = [[] for _ in range(2 * n)]

    def add(a, b, c):
        graph[a].append([b, c, len(graph[b])])
        graph[b].append([a, 0, len(graph[a]) - 1])

    for v in range(n):
        add(v, v + n, big if v in (s, t) else 1)
    for v in range(n):
        for u in neighbors[v]:
            add(v + n, u, big)
    src = s + n
    snk = t
    flow = 0
    while flow < cutoff:
        parent = [None] * (2 * n)
        parent[src] = (src, -1)
        queue = deque([src])
        while queue and parent[snk] is None:
            x = queue.popleft()
            for ai, arc in enumerate(graph[x]):
                if arc[1] > 0 and parent[arc[0]] is None:
                    parent[arc[0]] = (x, ai)
                    queue.append(arc[0])
        if parent[snk] is None:
            break
        x = snk
        while x != src:
            px, ai = parent[x]
            arc = graph[px][ai]
            arc[1] -= 1
            graph[x][arc[2]][1] += 1
            x = px
        flow += 1
    return flow
