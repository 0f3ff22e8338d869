"""Immutable simple-graph representation and structural queries.

Vertices are integers ``0..n-1``.  Edge ids equal positions in the edge
list, which makes every downstream construction reproducible byte for
byte.  All operations here are pure functions over immutable inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Malformed graph input or a violated operation precondition."""


class Graph:
    """Finite simple undirected graph with stable vertex/edge identifiers.

    Edges are stored with the smaller endpoint first; the edge id is the
    index in ``edges``.  ``adjacency[v]`` lists ``(neighbor, edge_id)``
    pairs in edge-id order.  Instances are immutable after construction
    and safe to share across concurrent readers.
    """

    __slots__ = ("n", "edges", "adjacency", "degrees")

    def __init__(self, n: int, edges):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"parallel edge ({key[0]},{key[1]})")
            seen.add(key)
            norm.append(key)
        adjacency = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(norm):
            adjacency[u].append((v, eid))
            adjacency[v].append((u, eid))
        self.n = n
        self.edges = tuple(norm)
        self.adjacency = tuple(tuple(a) for a in adjacency)
        self.degrees = tuple(len(a) for a in adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int):
        return tuple(u for u, _ in self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return any(x == v for x, _ in self.adjacency[u])

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    """Per-vertex side labels ('U' or 'W'); every edge crosses sides."""

    side: tuple

    def part(self, label: str):
        return tuple(v for v, s in enumerate(self.side) if s == label)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as edge-id sets plus the cut vertices of the graph."""

    blocks: tuple
    cut_vertices: frozenset


@dataclass(frozen=True)
class MspPath:
    """One maximal simple path: parallel edge-id and vertex sequences.

    ``vertices`` has one more entry than ``edge_ids``; for a closed path
    the first and last vertex coincide.
    """

    edge_ids: tuple
    vertices: tuple
    closed: bool

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def endpoints(self):
        return (self.vertices[0], self.vertices[-1])


@dataclass(frozen=True)
class MspDecomposition:
    """Partition of the edge set into maximal simple paths."""

    paths: tuple


def degree_sequence(g: Graph):
    """Per-vertex degree list."""
    return list(g.degrees)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(_component_of(g, 0)) == g.n


def connected_components(g: Graph):
    """Vertex sets of the components, each sorted, ordered by minimum vertex."""
    seen = [False] * g.n
    comps = []
    for v in range(g.n):
        if not seen[v]:
            comp = _component_of(g, v)
            for u in comp:
                seen[u] = True
            comps.append(sorted(comp))
    return comps


def _component_of(g: Graph, start: int):
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u, _ in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def bipartition(g: Graph):
    """Two-color the graph, or return None if it has an odd cycle.

    The lowest-id vertex of each component lands on side 'U'.
    """
    side = [None] * g.n
    for start in range(g.n):
        if side[start] is not None:
            continue
        side[start] = "U"
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u, _ in g.adjacency[v]:
                if side[u] is None:
                    side[u] = "W" if side[v] == "U" else "U"
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return Bipartition(side=tuple(side))


def distance(g: Graph, u: int, v: int) -> int:
    """BFS shortest-path length; raises GraphError on unreachable pairs."""
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y, _ in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    raise GraphError(f"vertices {u} and {v} are in different components")


def blocks_and_cut_vertices(g: Graph) -> BlockDecomposition:
    """Standard block / cut-vertex decomposition of a connected graph.

    Blocks are maximal 2-connected subgraphs plus bridge edges, reported
    as edge-id sets sorted by their smallest edge id.
    """
    if not is_connected(g):
        raise GraphError("block decomposition requires a connected graph")
    if g.n == 0:
        return BlockDecomposition(blocks=(), cut_vertices=frozenset())

    disc = [0] * g.n
    low = [0] * g.n
    timer = [1]
    cut = set()
    blocks = []
    edge_stack = []

    def dfs(root):
        # iterative DFS; frame: (v, parent_edge, iterator index)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        root_children = 0
        while stack:
            v, pe, i = stack[-1]
            if i < len(g.adjacency[v]):
                stack[-1] = (v, pe, i + 1)
                u, eid = g.adjacency[v][i]
                if eid == pe:
                    continue
                if disc[u] == 0:
                    edge_stack.append(eid)
                    disc[u] = low[u] = timer[0]
                    timer[0] += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, eid, 0))
                elif disc[u] < disc[v]:
                    edge_stack.append(eid)
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        if p != root:
                            cut.add(p)
                        block = []
                        while True:
                            eid = edge_stack.pop()
                            block.append(eid)
                            if eid == pe:
                                break
                        blocks.append(frozenset(block))
        if root_children >= 2:
            cut.add(root)

    dfs(0)
    blocks.sort(key=min)
    return BlockDecomposition(blocks=tuple(blocks), cut_vertices=frozenset(cut))


def is_cycle_graph(g: Graph) -> bool:
    """True iff the graph is a single cycle."""
    return g.n >= 3 and is_connected(g) and all(d == 2 for d in g.degrees)


def maximal_simple_paths(g: Graph) -> MspDecomposition:
    """Partition the edge set into maximal simple paths.

    Internal vertices of each path have degree 2; path endpoints have
    degree != 2, except when the whole graph is a cycle (one closed
    path).  A cycle block hanging on a single branch vertex yields a
    closed path flagged as such.  Paths are ordered by smallest edge id;
    each is traversed from its smaller-id endpoint (ties broken toward
    the lexicographically smaller edge-id sequence).
    """
    if g.m == 0:
        raise GraphError("msp decomposition requires at least one edge")
    if not is_connected(g):
        raise GraphError("msp decomposition requires a connected graph")

    if all(d == 2 for d in g.degrees):
        # the graph is a single cycle: one closed path from vertex 0
        verts = [0]
        edges = []
        prev = -1
        v = 0
        # walk toward the smaller-id neighbor first
        while True:
            nbrs = [(u, e) for u, e in g.adjacency[v] if e != prev]
            u, e = min(nbrs)
            edges.append(e)
            verts.append(u)
            prev = e
            v = u
            if v == 0:
                break
        return MspDecomposition(paths=(MspPath(tuple(edges), tuple(verts), True),))

    used = [False] * g.m
    paths = []
    for eid in range(g.m):
        if used[eid]:
            continue
        u, v = g.edges[eid]
        edges = deque([eid])
        verts = deque([u, v])
        used[eid] = True
        for front in (True, False):
            while True:
                end = verts[0] if front else verts[-1]
                if g.degrees[end] != 2 or verts[0] == verts[-1]:
                    break
                last_eid = edges[0] if front else edges[-1]
                (nu, ne), = [(x, e) for x, e in g.adjacency[end] if e != last_eid]
                used[ne] = True
                if front:
                    edges.appendleft(ne)
                    verts.appendleft(nu)
                else:
                    edges.append(ne)
                    verts.append(nu)
        edges = tuple(edges)
        verts = tuple(verts)
        closed = verts[0] == verts[-1]
        if verts[0] > verts[-1] or (closed and edges[::-1] < edges):
            edges = edges[::-1]
            verts = verts[::-1]
        paths.append(MspPath(edges, verts, closed))
    return MspDecomposition(paths=tuple(paths))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (u, v) is encoded as u * h.n + v.

    Edge ids: copies of g (one per h-vertex, h-vertices in order) come
    first, then copies of h (one per g-vertex), each block in input
    edge order.
    """
    edges = []
    for v in range(h.n):
        for a, b in g.edges:
            edges.append((a * h.n + v, b * h.n + v))
    for u in range(g.n):
        for a, b in h.edges:
            edges.append((u * h.n + a, u * h.n + b))
    return Graph(g.n * h.n, edges)


def induced_subgraph(g: Graph, vertices):
    """Subgraph induced by ``vertices``.

    Returns ``(sub, vertex_map, edge_map)`` where ``vertex_map[i]`` and
    ``edge_map[j]`` are the original ids of the subgraph's vertex i and
    edge j.  Vertices keep their relative order; edges keep edge-id order.
    """
    vertex_map = sorted(vertices)
    index = {v: i for i, v in enumerate(vertex_map)}
    edges = []
    edge_map = []
    for eid, (u, v) in enumerate(g.edges):
        if u in index and v in index:
            edges.append((index[u], index[v]))
            edge_map.append(eid)
    return Graph(len(vertex_map), edges), vertex_map, edge_map


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertex deletions that disconnect the graph.

    Complete graphs give n - 1; disconnected input gives 0.  Otherwise
    the value is computed by vertex-capacity max-flow between a
    min-degree vertex and its non-neighbors, plus non-adjacent pairs of
    its neighbors.
    """
    from . import _backend

    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    adj_start = [0]
    adj_flat = []
    for v in range(g.n):
        adj_flat.extend(u for u, _ in g.adjacency[v])
        adj_start.append(len(adj_flat))
    return _backend.kernel.vertex_connectivity(g.n, adj_start, adj_flat)
