# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: weighting search and vertex connectivity.

Mirrors ``vcew._kernel_py`` exactly; both backends must return
identical results on identical inputs.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

BACKEND_NAME = "cython"


cdef int* _to_c_array(list xs) except NULL:
    cdef int n = len(xs)
    cdef int* arr = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if arr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        arr[i] = xs[i]
    return arr


def search_weighting(int n, int m, list eu, list ev, list order, int k,
                     list fixed, list parity, list adj_start, list adj_flat):
    """Backtracking proper-weighting search; see the Python twin for docs."""
    if m == 0:
        return []
    cdef int* c_eu = NULL
    cdef int* c_ev = NULL
    cdef int* c_order = NULL
    cdef int* c_fixed = NULL
    cdef int* c_parity = NULL
    cdef int* c_as = NULL
    cdef int* c_af = NULL
    cdef int* w = NULL
    cdef int* rem = NULL
    cdef int* csum = NULL
    cdef int* cur = NULL
    cdef int pos, e, prev, u, v, f, chosen, wt, x, i, y, ok
    cdef list result = None
    try:
        c_eu = _to_c_array(eu)
        c_ev = _to_c_array(ev)
        c_order = _to_c_array(order)
        c_fixed = _to_c_array(fixed)
        c_parity = _to_c_array(parity)
        c_as = _to_c_array(adj_start)
        c_af = _to_c_array(adj_flat)
        w = <int*> malloc(m * sizeof(int))
        cur = <int*> malloc(m * sizeof(int))
        rem = <int*> malloc(n * sizeof(int))
        csum = <int*> malloc(n * sizeof(int))
        if w == NULL or cur == NULL or rem == NULL or csum == NULL:
            raise MemoryError()
        for e in range(m):
            w[e] = 0
            cur[e] = 0
        for x in range(n):
            rem[x] = c_as[x + 1] - c_as[x]
            csum[x] = 0

        pos = 0
        while True:
            e = c_order[pos]
            prev = cur[pos]
            if prev:
                u = c_eu[e]
                v = c_ev[e]
                w[e] = 0
                csum[u] -= prev
                csum[v] -= prev
                rem[u] += 1
                rem[v] += 1
            f = c_fixed[e]
            chosen = 0
            wt = 1 if f else prev + 1
            while wt <= k:
                if f:
                    if prev:
                        break
                    wt = f
                # tentative assignment
                u = c_eu[e]
                v = c_ev[e]
                w[e] = wt
                csum[u] += wt
                csum[v] += wt
                rem[u] -= 1
                rem[v] -= 1
                ok = 1
                if rem[u] == 0:
                    if c_parity[u] >= 0 and (csum[u] & 1) != c_parity[u]:
                        ok = 0
                    else:
                        for i in range(c_as[u], c_as[u + 1]):
                            y = c_af[i]
                            if rem[y] == 0 and csum[y] == csum[u]:
                                ok = 0
                                break
                if ok and rem[v] == 0:
                    if c_parity[v] >= 0 and (csum[v] & 1) != c_parity[v]:
                        ok = 0
                    else:
                        for i in range(c_as[v], c_as[v + 1]):
                            y = c_af[i]
                            if rem[y] == 0 and csum[y] == csum[v]:
                                ok = 0
                                break
                if ok:
                    chosen = wt
                    break
                w[e] = 0
                csum[u] -= wt
                csum[v] -= wt
                rem[u] += 1
                rem[v] += 1
                if f:
                    break
                wt += 1
            if chosen:
                cur[pos] = chosen
                pos += 1
                if pos == m:
                    result = [w[e] for e in range(m)]
                    break
            else:
                cur[pos] = 0
                pos -= 1
                if pos < 0:
                    break
        return result
    finally:
        free(c_eu)
        free(c_ev)
        free(c_order)
        free(c_fixed)
        free(c_parity)
        free(c_as)
        free(c_af)
        free(w)
        free(cur)
        free(rem)
        free(csum)


def vertex_connectivity(int n, list adj_start, list adj_flat):
    """Vertex connectivity of a connected non-complete graph.

    Same algorithm as the Python twin: node-split unit-capacity
    max-flow from a min-degree vertex to its non-neighbors and between
    non-adjacent neighbor pairs, with cutoff at the current best.
    """
    cdef int* c_as = NULL
    cdef int* c_af = NULL
    cdef int L = len(adj_flat)
    cdef int narcs = 2 * n + 2 * L
    cdef int nn = 2 * n
    cdef int* arc_to = NULL
    cdef int* arc_cap = NULL
    cdef int* arc_nxt = NULL
    cdef int* head = NULL
    cdef int* parent_node = NULL
    cdef int* parent_arc = NULL
    cdef int* queue = NULL
    cdef char* adj_mat = NULL
    cdef int v, u, i, a, v0, best, big, s, t, src, snk, flow
    cdef int qh, qt, x, ai, px
    try:
        c_as = _to_c_array(adj_start)
        c_af = _to_c_array(adj_flat)
        arc_to = <int*> malloc(narcs * sizeof(int))
        arc_cap = <int*> malloc(narcs * sizeof(int))
        arc_nxt = <int*> malloc(narcs * sizeof(int))
        head = <int*> malloc(nn * sizeof(int))
        parent_node = <int*> malloc(nn * sizeof(int))
        parent_arc = <int*> malloc(nn * sizeof(int))
        queue = <int*> malloc(nn * sizeof(int))
        adj_mat = <char*> malloc(n * n * sizeof(char))
        if (arc_to == NULL or arc_cap == NULL or arc_nxt == NULL or
                head == NULL or parent_node == NULL or parent_arc == NULL or
                queue == NULL or adj_mat == NULL):
            raise MemoryError()
        for i in range(n * n):
            adj_mat[i] = 0
        for v in range(n):
            for i in range(c_as[v], c_as[v + 1]):
                adj_mat[v * n + c_af[i]] = 1

        # arc structure: 2v / 2v+1 split v_in->v_out and residual;
        # 2n+2i / 2n+2i+1 the directed arc for adjacency slot i and residual
        for v in range(nn):
            head[v] = -1
        for v in range(n):
            a = 2 * v
            arc_to[a] = v + n
            arc_nxt[a] = head[v]
            head[v] = a
            arc_to[a + 1] = v
            arc_nxt[a + 1] = head[v + n]
            head[v + n] = a + 1
        for v in range(n):
            for i in range(c_as[v], c_as[v + 1]):
                u = c_af[i]
                a = 2 * n + 2 * i
                arc_to[a] = u            # v_out -> u_in
                arc_nxt[a] = head[v + n]
                head[v + n] = a
                arc_to[a + 1] = v + n    # residual u_in -> v_out
                arc_nxt[a + 1] = head[u]
                head[u] = a + 1

        big = n + 1
        v0 = 0
        for v in range(1, n):
            if c_as[v + 1] - c_as[v] < c_as[v0 + 1] - c_as[v0]:
                v0 = v
        best = c_as[v0 + 1] - c_as[v0]

        # candidate pairs: (v0, non-neighbor) and non-adjacent neighbor pairs
        pairs = []
        for t in range(n):
            if t != v0 and adj_mat[v0 * n + t] == 0:
                pairs.append((v0, t))
        for i in range(c_as[v0], c_as[v0 + 1]):
            for ai in range(i + 1, c_as[v0 + 1]):
                u = c_af[i]
                x = c_af[ai]
                if u > x:
                    u, x = x, u
                if adj_mat[u * n + x] == 0:
                    pairs.append((u, x))

        for s, t in pairs:
            if best == 0:
                break
            # reset capacities
            for v in range(n):
                arc_cap[2 * v] = 1
                arc_cap[2 * v + 1] = 0
            arc_cap[2 * s] = big
            arc_cap[2 * t] = big
            for i in range(L):
                arc_cap[2 * n + 2 * i] = big
                arc_cap[2 * n + 2 * i + 1] = 0
            src = s + n
            snk = t
            flow = 0
            while flow < best:
                for v in range(nn):
                    parent_node[v] = -1
                parent_node[src] = src
                parent_arc[src] = -1
                queue[0] = src
                qh = 0
                qt = 1
                while qh < qt and parent_node[snk] < 0:
                    x = queue[qh]
                    qh += 1
                    a = head[x]
                    while a >= 0:
                        if arc_cap[a] > 0 and parent_node[arc_to[a]] < 0:
                            parent_node[arc_to[a]] = x
                            parent_arc[arc_to[a]] = a
                            queue[qt] = arc_to[a]
                            qt += 1
                        a = arc_nxt[a]
                if parent_node[snk] < 0:
                    break
                x = snk
                while x != src:
                    a = parent_arc[x]
                    arc_cap[a] -= 1
                    arc_cap[a ^ 1] += 1
                    x = parent_node[x]
                flow += 1
            if flow < best:
                best = flow
        return best
    finally:
        free(c_as)
        free(c_af)
        free(arc_to)
        free(arc_cap)
        free(arc_nxt)
        free(head)
        free(parent_node)
        free(parent_arc)
        free(queue)
        free(adj_mat)
