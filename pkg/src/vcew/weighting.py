"""Edge weightings, the induced vertex coloring, and properness checks.

A weighting assigns each edge an integer in ``1..k``; the color of a
vertex is the sum of the weights of its incident edges.  A weighting is
proper when adjacent vertices receive distinct colors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, is_connected


@dataclass(frozen=True)
class EdgeWeighting:
    """Weights per edge id, all in ``{1, ..., k}``."""

    k: int
    weights: tuple

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("weight alphabet size k must be positive")
        if any(not (1 <= w <= self.k) for w in self.weights):
            raise ValueError(f"weights must lie in 1..{self.k}")


@dataclass(frozen=True)
class InducedColoring:
    """Per-vertex colors induced by an edge weighting."""

    colors: tuple


@dataclass(frozen=True)
class ProperVerdict:
    """Outcome of a properness check with all conflicting edge ids."""

    proper: bool
    conflicts: tuple

    def __bool__(self):
        return self.proper


def _check_cover(g: Graph, w: EdgeWeighting):
    if len(w.weights) != g.m:
        raise ValueError(
            f"weighting covers {len(w.weights)} edges, graph has {g.m}"
        )


def induced_coloring(g: Graph, w: EdgeWeighting) -> InducedColoring:
    """Color every vertex with the sum of its incident edge weights."""
    _check_cover(g, w)
    colors = [0] * g.n
    for eid, (u, v) in enumerate(g.edges):
        colors[u] += w.weights[eid]
        colors[v] += w.weights[eid]
    return InducedColoring(colors=tuple(colors))


def is_proper(g: Graph, w: EdgeWeighting) -> ProperVerdict:
    """Check the induced coloring; report every conflicting edge id.

    All conflicts are listed (ascending) rather than just the first:
    repair loops need the conflict count to prove progress.
    """
    colors = induced_coloring(g, w).colors
    conflicts = tuple(
        eid for eid, (u, v) in enumerate(g.edges) if colors[u] == colors[v]
    )
    return ProperVerdict(proper=not conflicts, conflicts=conflicts)


def admits_vc1(g: Graph) -> bool:
    """True iff every edge joins vertices of distinct degrees.

    Equivalent to the all-ones weighting being proper, which is the
    exact characterization of mu = 1.
    """
    if g.n < 3:
        raise GraphError("mu-level checks need at least three vertices")
    if not is_connected(g):
        raise GraphError("admits_vc1 requires a connected graph")
    return all(g.degrees[u] != g.degrees[v] for u, v in g.edges)
