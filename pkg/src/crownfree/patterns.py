"""Forbidden-configuration catalogue and induced-subgraph search.

Every catalogue pattern lists its vertices in a fixed canonical order chosen
so that each vertex after the first is adjacent to an earlier one where the
pattern allows it.  The search assigns pattern vertices in that order and
tries host vertices in increasing order, so embeddings come out in
lexicographic order of their image tuples and the first hit is reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import families
from .errors import UnknownPattern
from .graph import Graph, bits, disjoint_union, join


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph
    root: Optional[int] = None

    def __post_init__(self) -> None:
        if self.root is not None and not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} is not a vertex of pattern {self.name}")

    @property
    def size(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class Embedding:
    """Injective induced map: pattern vertex ``i`` goes to host vertex ``image[i]``."""

    pattern: Pattern
    image: Tuple[int, ...]

    @property
    def root_image(self) -> Optional[int]:
        r = self.pattern.root
        return None if r is None else self.image[r]

    def vertices(self) -> frozenset:
        return frozenset(self.image)

    def is_valid(self, g: Graph) -> bool:
        """Re-check injectivity and inducedness against ``g``."""
        p = self.pattern.graph
        if len(self.image) != p.n or len(set(self.image)) != p.n:
            return False
        if any(not 0 <= v < g.n for v in self.image):
            return False
        for a in range(p.n):
            for b in range(a + 1, p.n):
                if p.adjacent(a, b) != g.adjacent(self.image[a], self.image[b]):
                    return False
        return True

    def to_dict(self) -> dict:
        return {"pattern": self.pattern.name, "image": list(self.image)}


# ---------------------------------------------------------------------------
# catalogue


def _fixed(name: str, n: int, edges: Sequence[Tuple[int, int]], root: Optional[int] = None) -> Pattern:
    return Pattern(name, Graph.from_edges(n, edges), root)


_FIXED: Dict[str, Callable[[], Pattern]] = {
    "claw": lambda: _fixed("claw", 4, [(0, 1), (0, 2), (0, 3)], root=0),
    # claw 0-1, 0-2, 0-3 with edge 0-3 subdivided by 4
    "fork": lambda: _fixed("fork", 5, [(0, 1), (0, 2), (0, 3), (3, 4)], root=0),
    "diamond": lambda: _fixed("diamond", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    "dart": lambda: _fixed("dart", 5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3)]),
    "hvn": lambda: _fixed(
        "hvn", 5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    ),
    # apex 0 joined to the claw centred at 1
    "crown": lambda: _fixed(
        "crown", 5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], root=1
    ),
    "p3p2": lambda: _fixed("p3p2", 5, [(0, 1), (1, 2), (3, 4)]),
    "p3k1": lambda: _fixed("p3k1", 4, [(0, 1), (1, 2)]),
}

CATALOG_NAMES = ("crown", "fork", "p5", "p3p2", "claw", "diamond", "dart", "hvn")

# class name -> forbidden patterns
CLASSES: Dict[str, Tuple[str, ...]] = {
    "crown-p5": ("crown", "p5"),
    "crown-fork": ("crown", "fork"),
    "crown-p3p2": ("crown", "p3p2"),
    "claw-free": ("claw",),
}

_PARAM = re.compile(r"^([pck])(\d+)$")
_MULT = re.compile(r"^(\d+)([a-z].*)$")


def k1_join(h: Pattern) -> Pattern:
    """K1 + H; the new apex is vertex 0 and H keeps its order shifted by one."""
    root = None if h.root is None else h.root + 1
    return Pattern(f"k1+{h.name}", join(families.complete(1), h.graph), root)


def union(a: Pattern, b: Pattern) -> Pattern:
    return Pattern(f"{a.name}|{b.name}", disjoint_union(a.graph, b.graph), a.root)


def copies(k: int, h: Pattern) -> Pattern:
    """kH, the union of ``k`` disjoint copies."""
    if k < 1:
        raise ValueError("need at least one copy")
    g = h.graph
    for _ in range(k - 1):
        g = disjoint_union(g, h.graph)
    return Pattern(f"{k}{h.name}", g)


def _atom(name: str) -> Pattern:
    if name in _FIXED:
        return _FIXED[name]()
    m = _PARAM.match(name)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "p" and k >= 1:
            return Pattern(name, families.path(k))
        if kind == "c" and k >= 3:
            return Pattern(name, families.cycle(k))
        if kind == "k" and k >= 1:
            return Pattern(name, families.complete(k))
    m = _MULT.match(name)
    if m and int(m.group(1)) >= 1:
        inner = _atom(m.group(2))
        return Pattern(name, copies(int(m.group(1)), inner).graph)
    raise UnknownPattern(f"unknown pattern {name!r}")


def pattern_catalog(name: str) -> Pattern:
    """Look up a pattern by name.

    Besides the fixed names (claw, fork, diamond, dart, hvn, crown, p3p2,
    p3k1) this understands ``p<k>``, ``c<k>``, ``k<k>``, a multiplier prefix
    such as ``2k2``, disjoint union ``a|b`` and join ``a+b``.
    """
    key = name.strip().lower()
    if not key:
        raise UnknownPattern("empty pattern name")
    if "|" in key:
        parts = [pattern_catalog(p) for p in key.split("|")]
        acc = parts[0]
        for p in parts[1:]:
            acc = union(acc, p)
        return Pattern(key, acc.graph, acc.root)
    if "+" in key:
        parts = [_atom(p) for p in key.split("+")]
        acc = parts[0]
        for p in parts[1:]:
            acc = Pattern(key, join(acc.graph, p.graph))
        root = None
        if parts[0].graph.n == 1 and len(parts) == 2 and parts[1].root is not None:
            root = parts[1].root + 1
        return Pattern(key, acc.graph, root)
    return _atom(key)


# ---------------------------------------------------------------------------
# search


def _iter_embeddings(g: Graph, p: Pattern) -> Iterator[Tuple[int, ...]]:
    pg = p.graph
    k = pg.n
    if k > g.n:
        return
    if k == 0:
        yield ()
        return
    host_deg = [g.degree(v) for v in range(g.n)]
    allowed = []
    for i in range(k):
        d = pg.degree(i)
        allowed.append(sum(1 << v for v in range(g.n) if host_deg[v] >= d))
    # earlier[i]: (j, adjacent?) for j < i
    earlier = [[(j, pg.adjacent(i, j)) for j in range(i)] for i in range(k)]
    full = g.full_mask
    rows = g.rows
    image = [0] * k

    def extend(i: int, used: int) -> Iterator[Tuple[int, ...]]:
        cand = allowed[i] & ~used
        for j, adj in earlier[i]:
            r = rows[image[j]]
            cand &= r if adj else full & ~r
            if not cand:
                return
        for v in bits(cand):
            image[i] = v
            if i + 1 == k:
                yield tuple(image)
            else:
                yield from extend(i + 1, used | 1 << v)

    yield from extend(0, 0)


def find_induced(g: Graph, p: Pattern, enumerate: bool = False):
    """First induced embedding of ``p`` in ``g`` (or ``None``); all of them with ``enumerate``."""
    it = _iter_embeddings(g, p)
    if enumerate:
        return [Embedding(p, img) for img in it]
    for img in it:
        return Embedding(p, img)
    return None


def count_induced(g: Graph, p: Pattern) -> int:
    return sum(1 for _ in _iter_embeddings(g, p))


@dataclass(frozen=True)
class FreeVerdict:
    free: bool
    witness: Optional[Embedding] = None

    def __bool__(self) -> bool:
        return self.free


def is_free(g: Graph, ps: Sequence[Pattern]) -> FreeVerdict:
    for p in ps:
        emb = find_induced(g, p)
        if emb is not None:
            return FreeVerdict(False, emb)
    return FreeVerdict(True)


@dataclass(frozen=True)
class ClassFlags:
    """Presence flag per catalogue pattern plus the derived target classes."""

    present: Dict[str, bool]
    witnesses: Dict[str, Embedding] = field(default_factory=dict, compare=False)

    def free_of(self, name: str) -> bool:
        return not self.present[name]

    def member(self, cls: str) -> bool:
        return all(not self.present[p] for p in CLASSES[cls])

    @property
    def crown_p5_free(self) -> bool:
        return self.member("crown-p5")

    @property
    def crown_fork_free(self) -> bool:
        return self.member("crown-fork")

    @property
    def crown_p3p2_free(self) -> bool:
        return self.member("crown-p3p2")

    def to_dict(self) -> dict:
        return {
            "free": {name: not hit for name, hit in self.present.items()},
            "classes": {cls: self.member(cls) for cls in CLASSES},
            "witnesses": {name: list(w.image) for name, w in self.witnesses.items()},
        }


def classify(g: Graph) -> ClassFlags:
    present: Dict[str, bool] = {}
    witnesses: Dict[str, Embedding] = {}
    for name in CATALOG_NAMES:
        emb = find_induced(g, pattern_catalog(name))
        present[name] = emb is not None
        if emb is not None:
            witnesses[name] = emb
    return ClassFlags(present, witnesses)


def class_predicate(name: str) -> Callable[[Graph], bool]:
    """Predicate for a class filter name.

    Accepts the target classes (``crown-p5``, ``crown-fork``, ``crown-p3p2``,
    ``claw-free``), ``<pattern>-free``, ``<pattern>-present`` and ``all``.
    """
    key = name.strip().lower()
    if key in ("all", "any", ""):
        return lambda g: True
    if key in CLASSES:
        pats = [pattern_catalog(p) for p in CLASSES[key]]
        return lambda g: is_free(g, pats).free
    for suffix, want_free in (("-free", True), ("-present", False)):
        if key.endswith(suffix):
            pats = [pattern_catalog(p) for p in key[: -len(suffix)].split(",")]
            return lambda g: is_free(g, pats).free == want_free
    raise UnknownPattern(f"unknown class filter {name!r}")


def class_patterns(name: str) -> List[Pattern]:
    return [pattern_catalog(p) for p in CLASSES[name]]
