"""Shared hypothesis strategies and brute-force reference oracles."""

from itertools import combinations, permutations, product

from hypothesis import strategies as st

from crownfree.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if connected:
        # a random spanning path-like backbone keeps the graph connected
        order = draw(st.permutations(range(n))) if n else []
        edges += [(min(a, b), max(a, b)) for a, b in zip(order, order[1:])]
    return Graph.from_edges(n, edges)


def brute_chromatic(g: Graph) -> int:
    for k in range(g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges()):
                return k
    raise AssertionError("unreachable")


def brute_clique(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if all(g.adjacent(a, b) for a, b in combinations(s, 2)):
                best = k
                break
        else:
            break
    return best


def brute_embedding_count(g: Graph, p: Graph) -> int:
    """Injective maps p -> g that preserve adjacency and non-adjacency."""
    count = 0
    for image in permutations(range(g.n), p.n):
        if all(g.adjacent(image[a], image[b]) == p.adjacent(a, b) for a, b in combinations(range(p.n), 2)):
            count += 1
    return count


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    ea = set(a.edges())
    for perm in permutations(range(a.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in ea for u, v in b.edges()):
            return True
    return False
