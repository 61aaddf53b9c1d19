"""Exact decision procedures for desk-scale graphs.

All routines are exponential in the worst case and intended for graphs with
at most a dozen or so vertices; they run per call with no shared state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from .errors import NotPerfect
from .graph import Graph, VertexSet, bits, complement, to_set
from .patterns import find_induced, pattern_catalog


@dataclass(frozen=True)
class Coloring:
    """``colors[v]`` is the 0-based colour of vertex ``v``."""

    colors: Tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def conflicts(self, g: Graph) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in g.edges() if self.colors[u] == self.colors[v]]


@dataclass(frozen=True)
class HoleWitness:
    cycle: Tuple[int, ...]
    kind: str  # "hole" | "antihole"

    def __len__(self) -> int:
        return len(self.cycle)

    def is_valid(self, g: Graph) -> bool:
        """Re-check that ``cycle`` is an induced cycle of ``g`` (or of its complement for antiholes)."""
        k = len(self.cycle)
        if self.kind not in ("hole", "antihole") or len(set(self.cycle)) != k:
            return False
        if k < (4 if self.kind == "hole" else 5):
            return False
        if any(not 0 <= v < g.n for v in self.cycle):
            return False
        h = g if self.kind == "hole" else complement(g)
        for a in range(k):
            for b in range(a + 1, k):
                consecutive = b == a + 1 or (a == 0 and b == k - 1)
                if h.adjacent(self.cycle[a], self.cycle[b]) != consecutive:
                    return False
        return True

    @property
    def is_odd(self) -> bool:
        return len(self.cycle) % 2 == 1 and len(self.cycle) >= 5

    def to_dict(self) -> dict:
        return {"kind": self.kind, "cycle": list(self.cycle)}


# ---------------------------------------------------------------------------
# clique number


def _greedy_color_order(g: Graph, cand: int) -> Tuple[List[int], List[int]]:
    """Sequential colouring of ``cand``; returns vertices and their colour bounds in order."""
    order: List[int] = []
    bounds: List[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~g.rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def clique_number(g: Graph) -> Tuple[int, VertexSet]:
    """Maximum clique size and one maximum clique."""
    best = [0, 0]  # size, mask

    def expand(current: int, size: int, cand: int) -> None:
        order, bounds = _greedy_color_order(g, cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best[0]:
                return
            v = order[idx]
            new_cand = cand & g.rows[v]
            if new_cand:
                expand(current | 1 << v, size + 1, new_cand)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, current | 1 << v
            cand &= ~(1 << v)

    if g.n:
        expand(0, 0, g.full_mask)
    return best[0], to_set(best[1])


def clique_number_of(g: Graph, vertices) -> int:
    from .graph import induced_subgraph

    sub, _ = induced_subgraph(g, vertices)
    return clique_number(sub)[0]


def maximal_cliques(g: Graph, within: Optional[int] = None) -> List[VertexSet]:
    """All maximal cliques of ``G[within]`` (Bron-Kerbosch with pivoting), sorted."""
    out: List[int] = []
    universe = g.full_mask if within is None else within

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: bin(g.rows[u] & p).count("1"))
        for v in bits(p & ~g.rows[pivot]):
            bk(r | 1 << v, p & g.rows[v], x & g.rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    if universe:
        bk(0, universe, 0)
    return sorted((to_set(m) for m in out), key=lambda s: sorted(s))


# ---------------------------------------------------------------------------
# colouring


def _dsatur_greedy(g: Graph) -> List[int]:
    n = g.n
    colors = [-1] * n
    sat: List[int] = [0] * n  # bitmask of neighbour colours
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (bin(sat[u]).count("1"), g.degree(u), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in bits(g.rows[v]):
            sat[u] |= 1 << c
    return colors


def k_colorable(g: Graph, k: int) -> Optional[Coloring]:
    """A proper colouring with at most ``k`` colours, or ``None`` if none exists.

    DSATUR-ordered backtracking; a new colour is only ever opened as the
    smallest unused index, which removes colour-permutation symmetry.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n = g.n
    if n == 0:
        return Coloring(())
    if k == 0:
        return None
    colors = [-1] * n
    # nbr_count[v][c]: number of coloured neighbours of v using colour c
    nbr_count = [[0] * k for _ in range(n)]
    sat = [0] * n
    deg = [g.degree(v) for v in range(n)]

    def pick() -> int:
        best, key = -1, None
        for u in range(n):
            if colors[u] < 0:
                kk = (sat[u], deg[u])
                if key is None or kk > key:
                    best, key = u, kk
        return best

    def assign(v: int, c: int, delta: int) -> None:
        for u in bits(g.rows[v]):
            cnt = nbr_count[u]
            before = cnt[c]
            cnt[c] = before + delta
            if delta > 0 and before == 0:
                sat[u] += 1
            elif delta < 0 and before == 1:
                sat[u] -= 1

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        if sat[v] >= k:
            return False
        cnt = nbr_count[v]
        for c in range(min(used + 1, k)):
            if cnt[c]:
                continue
            colors[v] = c
            assign(v, c, 1)
            if solve(done + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colors[v] = -1
        return False

    if solve(0, 0):
        return Coloring(tuple(colors))
    return None


def chromatic_number(g: Graph) -> Tuple[int, Coloring]:
    """Exact chromatic number with an optimal colouring.

    Starts from the clique lower bound and stops below the DSATUR greedy
    upper bound.
    """
    if g.n == 0:
        return 0, Coloring(())
    greedy = _dsatur_greedy(g)
    upper = max(greedy) + 1
    lower, _ = clique_number(g)
    for k in range(lower, upper):
        col = k_colorable(g, k)
        if col is not None:
            return k, col
    return upper, Coloring(tuple(greedy))


def color_subset(g: Graph, vertices, offset: int = 0) -> Dict[int, int]:
    """Optimal colouring of ``G[vertices]`` as a vertex->colour map shifted by ``offset``."""
    from .graph import induced_subgraph

    sub, index = induced_subgraph(g, vertices)
    _, col = chromatic_number(sub)
    return {v: offset + col.colors[k] for v, k in index.items()}


# ---------------------------------------------------------------------------
# odd holes / antiholes


def _find_odd_induced_cycle(g: Graph) -> Optional[Tuple[int, ...]]:
    rows = g.rows
    n = g.n
    for s in range(n):
        allowed = g.full_mask & ~((1 << (s + 1)) - 1)
        s_row = rows[s]
        path = [s]

        def extend(path_mask: int, interior_nbrs: int) -> Optional[Tuple[int, ...]]:
            last = path[-1]
            cand = rows[last] & allowed & ~path_mask & ~interior_nbrs
            for w in bits(cand):
                if len(path) > 1 and s_row >> w & 1:
                    length = len(path) + 1
                    if length >= 5 and length % 2 == 1:
                        return tuple(path) + (w,)
                    continue
                path.append(w)
                found = extend(path_mask | 1 << w, interior_nbrs | (rows[last] if last != s else 0))
                path.pop()
                if found:
                    return found
            return None

        found = extend(1 << s, 0)
        if found:
            return found
    return None


def find_odd_hole(g: Graph) -> Optional[HoleWitness]:
    """An induced odd cycle of length at least 5, or ``None``."""
    cyc = _find_odd_induced_cycle(g)
    return None if cyc is None else HoleWitness(cyc, "hole")


def find_odd_antihole(g: Graph) -> Optional[HoleWitness]:
    cyc = _find_odd_induced_cycle(complement(g))
    return None if cyc is None else HoleWitness(cyc, "antihole")


@dataclass(frozen=True)
class PerfectVerdict:
    perfect: bool
    witness: Optional[HoleWitness] = None

    def __bool__(self) -> bool:
        return self.perfect


def is_perfect(g: Graph) -> PerfectVerdict:
    """Perfection via the Strong Perfect Graph Theorem: no odd hole and no odd antihole."""
    w = find_odd_hole(g) or find_odd_antihole(g)
    return PerfectVerdict(w is None, w)


def color_perfect(g: Graph) -> Coloring:
    """Optimal colouring of a perfect graph, using exactly clique-number many colours."""
    verdict = is_perfect(g)
    if not verdict.perfect:
        raise NotPerfect("graph is not perfect", verdict.witness)
    omega, _ = clique_number(g)
    col = k_colorable(g, omega)
    assert col is not None, "perfect graph not omega-colourable"
    return col


# ---------------------------------------------------------------------------
# partitions into stable set / cliques


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in bits(g.rows[x]):
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return True


_SPLIT_OBSTRUCTIONS = ("2k2", "c4", "c5")


def is_split(g: Graph) -> bool:
    """Vertex set splits into a stable set and a clique ({2K2, C4, C5}-freeness)."""
    return all(find_induced(g, pattern_catalog(p)) is None for p in _SPLIT_OBSTRUCTIONS)


class PartitionVerdict(NamedTuple):
    splits_into_stable_and_clique: bool
    splits_into_two_cliques: bool


def partition_testers(g: Graph) -> PartitionVerdict:
    return PartitionVerdict(is_split(g), is_bipartite(complement(g)))


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))[0]
