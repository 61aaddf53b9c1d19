"""Constructors for standard small graphs used as fixtures and patterns."""

from __future__ import annotations

from .graph import Graph, complement


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return complete_bipartite(1, k)


def antihole(k: int) -> Graph:
    return complement(cycle(k))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: shadow vertex ``n + v`` per ``v`` and an apex ``2n``."""
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges.extend((n + v, 2 * n) for v in range(n))
    return Graph.from_edges(2 * n + 1, edges)


def grotzsch() -> Graph:
    """The Mycielski-Groetzsch graph: 11 vertices, 20 edges, triangle-free, chromatic number 4."""
    return mycielskian(cycle(5))
