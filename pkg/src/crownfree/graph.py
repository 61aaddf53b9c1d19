"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex, so set algebra over
vertex sets is word-parallel.  Public functions take any iterable of vertex
indices and return ``frozenset``; the ``*_mask`` helpers are the internal
fast path used by the search code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import EmptyBase, FormatError, OutOfRange, OverlappingSets, UnsupportedSize

MAX_VERTICES = 64

VertexSet = FrozenSet[int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_set(mask: int) -> VertexSet:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood bitmask of ``v``.  Instances are
    immutable and hashable; equality is labelled equality.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise UnsupportedSize(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("rows must have one entry per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise OutOfRange(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise UnsupportedSize(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # queries ------------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count("1")

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise OutOfRange(f"vertex {v!r} not in 0..{self.n - 1}")

    def mask(self, vertices: Iterable[int]) -> int:
        """Bitmask of ``vertices`` after range-checking each one."""
        m = 0
        for v in vertices:
            self.check_vertex(v)
            m |= 1 << v
        return m

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# graph6


def _g6_size_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no trailing newline, labels kept)."""
    if g.n > MAX_VERTICES:
        raise UnsupportedSize(f"graph6 writer supports n <= {MAX_VERTICES}")
    out = [_g6_size_header(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.  A leading ``>>graph6<<`` header is accepted."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(">>graph6<<"):
        base = len(">>graph6<<")
        line = line[base:]
    if not line:
        raise FormatError("empty graph6 line", offset=base)
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ch!r} outside the printable graph6 range", offset=base + k)
    if line[0] != "~":
        n, pos = ord(line[0]) - 63, 1
    else:
        if len(line) < 4:
            raise FormatError("truncated extended size header", offset=base + len(line))
        if line[1] == "~":
            raise UnsupportedSize(f"graph6 8-byte header implies n > {MAX_VERTICES}")
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
        if n <= 62:
            raise FormatError("extended size header used for n <= 62", offset=base + 1)
    if n > MAX_VERTICES:
        raise UnsupportedSize(f"graph6 line encodes n={n} > {MAX_VERTICES}")
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = line[pos:]
    if len(body) < need_bytes:
        raise FormatError(f"truncated bit field: need {need_bytes} bytes, got {len(body)}", offset=base + len(line))
    if len(body) > need_bytes:
        raise FormatError("trailing bytes after bit field", offset=base + pos + need_bytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_dimacs(text: str) -> Graph:
    """Parse a DIMACS ``.col`` document (``p edge n m`` / ``e u v``, 1-indexed)."""
    n: Optional[int] = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 3 or n is not None:
                raise FormatError("bad or repeated problem line", line=lineno)
            try:
                n = int(parts[2])
            except ValueError:
                raise FormatError("vertex count is not an integer", line=lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise FormatError("edge before problem line", line=lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except (ValueError, IndexError):
                raise FormatError("malformed edge line", line=lineno) from None
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise FormatError(f"invalid edge {u + 1} {v + 1}", line=lineno)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown line type {parts[0]!r}", line=lineno)
    if n is None:
        raise FormatError("missing problem line")
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# basic operations


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Return ``G[s]`` relabelled to ``0..|s|-1`` in increasing order, plus the old->new map."""
    order = sorted(set(s))
    for v in order:
        g.check_vertex(v)
    index = {v: k for k, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for u in bits(g.rows[v]):
            k = index.get(u)
            if k is not None:
                r |= 1 << k
        rows.append(r)
    return Graph(len(order), tuple(rows)), index


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v`` in ``g``."""
    rows = [0] * g.n
    for v in range(g.n):
        rows[perm[v]] = to_mask(perm[u] for u in bits(g.rows[v]))
    return Graph(g.n, tuple(rows))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.n
    return Graph(a.n + b.n, a.rows + tuple(r << shift for r in b.rows))


def join(a: Graph, b: Graph) -> Graph:
    shift = a.n
    amask = a.full_mask
    bmask = b.full_mask << shift
    rows = tuple(r | bmask for r in a.rows) + tuple((r << shift) | amask for r in b.rows)
    return Graph(a.n + b.n, rows)


# ---------------------------------------------------------------------------
# neighbourhoods


def neighbors(g: Graph, v: int) -> VertexSet:
    """N(v)."""
    g.check_vertex(v)
    return to_set(g.rows[v])


def closed_neighbors(g: Graph, v: int) -> VertexSet:
    """N[v] = N(v) plus v."""
    g.check_vertex(v)
    return to_set(g.rows[v] | 1 << v)


def non_neighbors(g: Graph, v: int) -> VertexSet:
    """M(v) = V(G) minus N[v]."""
    g.check_vertex(v)
    return to_set(g.full_mask & ~(g.rows[v] | 1 << v))


def set_neighbors_mask(g: Graph, xmask: int) -> int:
    acc = 0
    for v in bits(xmask):
        acc |= g.rows[v]
    return acc & ~xmask


def set_neighbors(g: Graph, x: Iterable[int]) -> VertexSet:
    """N(X): vertices outside X with a neighbour in X."""
    return to_set(set_neighbors_mask(g, g.mask(x)))


def set_non_neighbors(g: Graph, x: Iterable[int]) -> VertexSet:
    """M(X) = V(G) minus (X and N(X))."""
    xm = g.mask(x)
    return to_set(g.full_mask & ~(xm | set_neighbors_mask(g, xm)))


# ---------------------------------------------------------------------------
# distance layering


@dataclass(frozen=True)
class DistanceLayering:
    """Layers ``N^0(Q) = Q, N^1(Q), ...`` plus the vertices unreachable from Q."""

    graph: Graph
    base: VertexSet
    layers: Tuple[VertexSet, ...]
    unreachable: VertexSet
    _depth: Dict[int, int] = field(repr=False, compare=False, hash=False, default_factory=dict)

    def layer(self, i: int) -> VertexSet:
        """N^i(Q); empty beyond the last layer."""
        return self.layers[i] if 0 <= i < len(self.layers) else frozenset()

    def at_least(self, i: int) -> VertexSet:
        """N^{>=i}(Q) (reachable vertices only)."""
        out: set = set()
        for layer in self.layers[max(i, 0):]:
            out |= layer
        return frozenset(out)

    def depth(self, v: int) -> Optional[int]:
        """Layer index of ``v``, or ``None`` when unreachable."""
        return self._depth.get(v)

    def _distances_from(self, v: int) -> Dict[int, int]:
        g = self.graph
        dist = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for x in frontier:
                for y in bits(g.rows[x]):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        return dist

    def ancestors(self, v: int) -> VertexSet:
        """Vertices ``x`` in layers ``i <= depth(v)`` joined to ``v`` by a path of length ``depth(v) - i``.

        ``v`` itself is not reported.
        """
        j = self.depth(v)
        if j is None:
            return frozenset()
        dist = self._distances_from(v)
        return frozenset(
            x for x, d in self._depth.items() if x != v and d <= j and dist.get(x) == j - d
        )

    def descendants(self, v: int) -> VertexSet:
        i = self.depth(v)
        if i is None:
            return frozenset()
        dist = self._distances_from(v)
        return frozenset(
            y for y, d in self._depth.items() if y != v and d >= i and dist.get(y) == d - i
        )


def distance_layers(g: Graph, q: Iterable[int]) -> DistanceLayering:
    base = g.mask(q)
    if not base:
        raise EmptyBase("distance layering needs a nonempty base set")
    depth = {v: 0 for v in bits(base)}
    layers = [base]
    seen = base
    while True:
        nxt = set_neighbors_mask(g, layers[-1]) & ~seen
        if not nxt:
            break
        k = len(layers)
        for v in bits(nxt):
            depth[v] = k
        layers.append(nxt)
        seen |= nxt
    return DistanceLayering(
        graph=g,
        base=to_set(base),
        layers=tuple(to_set(m) for m in layers),
        unreachable=to_set(g.full_mask & ~seen),
        _depth=depth,
    )


def bfs_distances(g: Graph, source: int) -> List[Optional[int]]:
    """Single-source BFS distances (``None`` for unreachable vertices)."""
    g.check_vertex(source)
    dist: List[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in bits(g.rows[x]):
            if dist[y] is None:
                dist[y] = dist[x] + 1  # type: ignore[operator]
                queue.append(y)
    return dist


# ---------------------------------------------------------------------------
# set predicates


def is_clique_mask(g: Graph, m: int) -> bool:
    for v in bits(m):
        if (m & ~(1 << v)) & ~g.rows[v]:
            return False
    return True


def is_stable_mask(g: Graph, m: int) -> bool:
    for v in bits(m):
        if g.rows[v] & m:
            return False
    return True


def is_clique(g: Graph, x: Iterable[int]) -> bool:
    return is_clique_mask(g, g.mask(x))


def is_stable(g: Graph, x: Iterable[int]) -> bool:
    return is_stable_mask(g, g.mask(x))


def _disjoint_masks(g: Graph, x: Iterable[int], y: Iterable[int]) -> Tuple[int, int]:
    xm, ym = g.mask(x), g.mask(y)
    if xm & ym:
        raise OverlappingSets(f"sets share vertices {sorted(bits(xm & ym))}")
    return xm, ym


def complete_to(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    xm, ym = _disjoint_masks(g, x, y)
    return all(g.rows[v] & ym == ym for v in bits(xm))


def anticomplete_to(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    xm, ym = _disjoint_masks(g, x, y)
    return all(not g.rows[v] & ym for v in bits(xm))


# ---------------------------------------------------------------------------
# components


def components_mask(g: Graph, m: int) -> List[int]:
    out = []
    rest = m
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.rows[v]
            frontier = grow & m & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph, s: Optional[Iterable[int]] = None) -> List[VertexSet]:
    """Connected components of ``G[s]`` ordered by smallest vertex."""
    m = g.full_mask if s is None else g.mask(s)
    return [to_set(c) for c in components_mask(g, m)]


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components_mask(g, g.full_mask)) == 1
