"""Constructive colouring schemes for crown-free classes.

Each scheme follows the decomposition of the corresponding proof: it picks
an induced claw (or an induced copy of H), splits the vertex set into the
prescribed parts, colours each part from its own palette and records every
palette budget and structural fact it relied on.  When a relied-upon fact
fails at runtime the certificate carries a ``violation`` and the colouring
falls back to an exact one, so the returned colouring is always proper.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .certificate import (
    CLAW_FREE,
    CROWN_FORK,
    CROWN_P3P2,
    CROWN_P5,
    P3P2_CUBIC,
    BoundFunction,
    ColoredCertificate,
    Palette,
    Step,
    layered_bound,
)
from .errors import Disconnected, NotInClass
from .graph import (
    Graph,
    bits,
    components_mask,
    distance_layers,
    induced_subgraph,
    is_connected,
    is_stable_mask,
    to_mask,
)
from .oracles import chromatic_number, clique_number, color_perfect, is_perfect
from .patterns import Embedding, Pattern, find_induced, is_free, k1_join, pattern_catalog
from .structure import (
    StructureReport,
    build_partition,
    check_complete_attachers,
    check_no_far_layer,
    pick_claw,
    verify_structure_fork,
    verify_structure_p3p2,
)

Base = Callable[[Graph], Sequence[int]]


def exact_base(g: Graph) -> Tuple[int, ...]:
    """Optimal colouring; the default base colourer for the layered scheme."""
    return chromatic_number(g)[1].colors


def _omega(g: Graph, m: int) -> int:
    if not m:
        return 0
    sub, _ = induced_subgraph(g, list(bits(m)))
    return clique_number(sub)[0]


class _Assembly:
    """Collects palette steps and turns them into a certificate."""

    def __init__(self, g: Graph, scheme: str):
        self.g = g
        self.scheme = scheme
        self.local: Dict[int, Tuple[str, int]] = {}
        self.budgets: Dict[str, int] = {}
        self.sizes: Dict[str, int] = {}
        self.steps: List[Step] = []
        self.reports: List[StructureReport] = []
        self.problems: List[str] = []

    def palette(self, pid: str, budget: int) -> str:
        self.budgets[pid] = budget
        self.sizes.setdefault(pid, 0)
        return pid

    def fail(self, message: str) -> None:
        self.problems.append(message)

    def report(self, rep: StructureReport) -> StructureReport:
        self.reports.append(rep)
        for c in rep.failures:
            self.fail(f"claim {c.claim} failed: {c.detail}")
        return rep

    def place(
        self,
        step_id: str,
        pid: str,
        local: Dict[int, int],
        method: str,
        budget: Optional[int] = None,
        note: str = "",
        sub: Optional[ColoredCertificate] = None,
    ) -> Step:
        g = self.g
        clash = [v for v in local if v in self.local]
        if clash:
            self.fail(f"step {step_id} recolours {clash}")
        earlier = [s for s in self.steps if s.palette == pid]
        vm = to_mask(local)
        for s in earlier:
            em = to_mask(s.vertices)
            if any(g.rows[v] & em for v in bits(vm)):
                self.fail(f"step {step_id} is not anticomplete to {s.id} but reuses palette {pid}")
        used = len(set(local.values()))
        span = max(local.values(), default=-1) + 1
        self.sizes[pid] = max(self.sizes[pid], span)
        budget = self.budgets[pid] if budget is None else budget
        if used > budget:
            self.fail(f"step {step_id} needs {used} colours, budget {budget}")
        if self.sizes[pid] > self.budgets[pid]:
            self.fail(f"palette {pid} grows to {self.sizes[pid]} colours, budget {self.budgets[pid]}")
        if method != "recursive" and sub is None and earlier and method != "stable":
            method = "reuse" if method == "exact" else method
        step = Step(
            id=step_id,
            vertices=tuple(sorted(local)),
            palette=pid,
            budget=budget,
            method=method,
            colors_used=used,
            shares_with=tuple(s.id for s in earlier),
            note=note,
            sub=sub,
        )
        self.steps.append(step)
        for v, c in local.items():
            self.local[v] = (pid, c)
        return step

    def exact(self, step_id: str, pid: str, vertices: Iterable[int], budget: Optional[int] = None, note: str = "") -> Step:
        vs = sorted(set(vertices))
        local: Dict[int, int] = {}
        if vs:
            sub, index = induced_subgraph(self.g, vs)
            col = chromatic_number(sub)[1].colors
            local = {v: col[k] for v, k in index.items()}
        return self.place(step_id, pid, local, "exact", budget, note)

    def via_base(self, step_id: str, pid: str, vertices: Iterable[int], base: Base, budget: Optional[int] = None) -> Step:
        vs = sorted(set(vertices))
        local: Dict[int, int] = {}
        if vs:
            sub, index = induced_subgraph(self.g, vs)
            col = list(base(sub))
            if any(col[a] == col[b] for a, b in sub.edges()):
                self.fail(f"base colourer returned an improper colouring in step {step_id}")
            remap = {c: k for k, c in enumerate(sorted(set(col)))}
            local = {v: remap[col[k]] for v, k in index.items()}
        return self.place(step_id, pid, local, "exact", budget, note="base colourer")

    def perfect(self, step_id: str, pid: str, vertices: Iterable[int], budget: Optional[int] = None, note: str = "") -> Step:
        vs = sorted(set(vertices))
        if not vs:
            return self.place(step_id, pid, {}, "perfect", budget, note)
        sub, index = induced_subgraph(self.g, vs)
        verdict = is_perfect(sub)
        if not verdict.perfect:
            back = {k: v for v, k in index.items()}
            cyc = [back[k] for k in verdict.witness.cycle]
            self.fail(f"step {step_id}: part is not perfect ({verdict.witness.kind} {cyc})")
            return self.exact(step_id, pid, vs, budget, note)
        col = color_perfect(sub).colors
        return self.place(step_id, pid, {v: col[k] for v, k in index.items()}, "perfect", budget, note)

    def stable(self, step_id: str, pid: str, vertices: Iterable[int], budget: Optional[int] = None, note: str = "") -> Step:
        vs = sorted(set(vertices))
        if not is_stable_mask(self.g, to_mask(vs)):
            self.fail(f"step {step_id}: {vs} is not a stable set")
            return self.exact(step_id, pid, vs, budget, note)
        return self.place(step_id, pid, {v: 0 for v in vs}, "stable", budget, note)

    def finish(self, omega: int, bound: BoundFunction, branch: str, theorem: Optional[BoundFunction] = None) -> ColoredCertificate:
        g = self.g
        missing = [v for v in range(g.n) if v not in self.local]
        if missing:
            self.fail(f"vertices {missing} left uncoloured")
        offsets: Dict[str, int] = {}
        palettes = []
        nxt = 0
        for pid in self.budgets:
            offsets[pid] = nxt
            palettes.append(Palette(pid, self.budgets[pid], nxt, self.sizes[pid]))
            nxt += self.sizes[pid]
        limit = bound(omega)
        colors: Tuple[int, ...]
        if not missing:
            colors = tuple(offsets[self.local[v][0]] + self.local[v][1] for v in range(g.n))
            if any(colors[a] == colors[b] for a, b in g.edges()):
                self.fail("assembled colouring is improper")
            elif len(set(colors)) > limit:
                self.fail(f"{len(set(colors))} colours exceed the bound {limit}")
        if self.problems:
            colors = chromatic_number(g)[1].colors
            branch += "+fallback"
        return ColoredCertificate(
            scheme=self.scheme,
            n=g.n,
            omega=omega,
            bound=limit,
            bound_formula=bound.formula,
            branch=branch,
            colors=colors,
            palettes=palettes,
            trace=self.steps,
            claims=self.reports,
            violation="; ".join(self.problems) or None,
            theorem_bound=None if theorem is None else theorem(omega),
        )


def _require_class(g: Graph, names: Sequence[str]) -> None:
    verdict = is_free(g, [pattern_catalog(n) for n in names])
    if not verdict.free:
        w = verdict.witness
        raise NotInClass(f"graph induces a {w.pattern.name} at {list(w.image)}", w)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected; colour its components separately")


def by_components(g: Graph, colorer: Callable[[Graph], ColoredCertificate], scheme: str) -> ColoredCertificate:
    """Run ``colorer`` per component and merge; components share colours freely."""
    parts = components_mask(g, g.full_mask)
    if len(parts) == 1:
        return colorer(g)
    colors = [0] * g.n
    comps = []
    problems = []
    bound = omega = 0
    theorem = None
    formula = ""
    for m in parts:
        vs = tuple(bits(m))
        sub, _ = induced_subgraph(g, vs)
        cert = colorer(sub)
        for k, v in enumerate(vs):
            colors[v] = cert.colors[k]
        comps.append((vs, cert))
        if cert.violation:
            problems.append(f"component {list(vs)}: {cert.violation}")
        omega = max(omega, cert.omega)
        if cert.bound >= bound:
            bound, formula = cert.bound, cert.bound_formula
        if cert.theorem_bound is not None:
            theorem = max(theorem or 0, cert.theorem_bound)
    return ColoredCertificate(
        scheme=scheme,
        n=g.n,
        omega=omega,
        bound=bound,
        bound_formula=formula,
        branch="components",
        colors=tuple(colors),
        violation="; ".join(problems) or None,
        theorem_bound=theorem,
        components=comps,
    )


# ---------------------------------------------------------------------------
# claw-free graphs


def color_claw_free(g: Graph, scheme: str = "claw-free", theorem: Optional[BoundFunction] = None) -> ColoredCertificate:
    """Optimal colouring of a claw-free graph, checked per component against ½(w²+w)."""
    _require_class(g, ("claw",))
    omega = clique_number(g)[0]
    asm = _Assembly(g, scheme)
    asm.palette("G", CLAW_FREE(omega))
    for k, m in enumerate(components_mask(g, g.full_mask)):
        asm.exact(f"component-{k}", "G", bits(m), budget=CLAW_FREE(_omega(g, m)))
    return asm.finish(omega, CLAW_FREE, "claw-free", theorem)


# ---------------------------------------------------------------------------
# (crown, P5)-free


def _outside_reach(g: Graph, vi: int, others: Sequence[int], v1: int) -> List[int]:
    """Neighbours of ``vi`` other than ``v1`` with no neighbour among ``others``."""
    om = to_mask(others)
    return [x for x in bits(g.rows[vi] & ~(1 << v1)) if not g.rows[x] & om]


def color_crown_p5(g: Graph) -> ColoredCertificate:
    """Colour a connected (crown, P5)-free graph within 3/2(w²-w) colours.

    With a claw ``Q = (v1; v2, v3, v4)`` whose leaf ``v4`` satisfies
    ``N(v4) - v1 ⊆ N({v1, v2, v3})``, the palettes are: N(v1), then
    N(v2) - N[v1], then N²(Q) shared with N3 = N(v3) - N(v1) - N(v2) and
    with v1 itself.  Each palette needs at most ½(w²-w) colours.
    """
    _require_class(g, ("crown", "p5"))
    _require_connected(g)
    claw = pick_claw(g)
    if claw is None:
        return color_claw_free(g, "crown-p5", theorem=CROWN_P5)
    omega = clique_number(g)[0]
    asm = _Assembly(g, "crown-p5")
    v1 = claw.image[0]
    leaves = list(claw.image[1:])
    layering = distance_layers(g, claw.image)
    rep = StructureReport(claw.image)
    check_no_far_layer(g, layering, rep, "eqa-2")
    check_complete_attachers(g, layering, rep, "eqa-3")

    chosen = None
    for vi in leaves:
        others = [v1] + [x for x in leaves if x != vi]
        if not _outside_reach(g, vi, others, v1):
            chosen = vi
            break
    if chosen is None:
        x = _outside_reach(g, leaves[0], [v1] + leaves[1:], v1)[0]
        rep.add("co-1", False, f"no leaf satisfies the branch condition; e.g. {x} escapes at {leaves[0]}",
                [("adjacent", x, leaves[0], True)] + [("adjacent", x, q, False) for q in [v1] + leaves[1:]])
        asm.report(rep)
        asm.exact("fallback", asm.palette("G", CROWN_P5(omega)), range(g.n))
        return asm.finish(omega, CROWN_P5, "claw", CROWN_P5)
    rep.add("co-1", True, f"leaf {chosen} plays v4")
    asm.report(rep)
    a, b = [x for x in leaves if x != chosen]
    v2, v3, v4 = a, b, chosen
    half = CROWN_P5(omega) // 3  # ½(w²-w)

    n_v1 = g.rows[v1]
    n_v2 = g.rows[v2] & ~n_v1 & ~(1 << v1)
    n2q = to_mask(layering.layer(2))
    n3 = g.rows[v3] & ~n_v1 & ~g.rows[v2] & ~(1 << v1)
    asm.exact("N(v1)", asm.palette("P1", half), bits(n_v1), note=f"v1={v1}")
    asm.exact("N(v2)-N[v1]", asm.palette("P2", half), bits(n_v2), note=f"v2={v2}")
    asm.palette("P3", half)
    for k, comp in enumerate(components_mask(g, n2q)):
        asm.exact(f"N2(Q)[{k}]", "P3", bits(comp), note="component of N2(Q)")
    if any(g.rows[v] & n2q for v in bits(n3)):
        asm.fail("N3 is not anticomplete to N2(Q)")
    asm.exact("N3", "P3", bits(n3), note=f"v3={v3}; anticomplete to N2(Q)")
    asm.place("v1", "P3", {v1: 0}, "reuse", note="v1 anticomplete to N2(Q) and N3")
    rest = g.full_mask & ~(n_v1 | n_v2 | n2q | n3 | 1 << v1)
    if rest:
        asm.fail(f"vertices {list(bits(rest))} outside N(v1) + N(v2) + N3 + N2(Q) (v4={v4})")
    return asm.finish(omega, CROWN_P5, "claw", CROWN_P5)


# ---------------------------------------------------------------------------
# (crown, fork)-free


def _color_crown_fork_connected(g: Graph) -> ColoredCertificate:
    claw = pick_claw(g)
    if claw is None:
        return color_claw_free(g, "crown-fork", theorem=CROWN_FORK)
    omega = clique_number(g)[0]
    asm = _Assembly(g, "crown-fork")
    v = claw.image[0]
    asm.report(verify_structure_fork(g, claw, check_class=False))
    m = g.full_mask & ~(g.rows[v] | 1 << v)
    asm.perfect("M(v)", asm.palette("M", omega), bits(m), note=f"v={v}")
    nv = list(bits(g.rows[v]))
    sub, index = induced_subgraph(g, nv)
    sub_cert = _color_crown_fork(sub)
    if sub_cert.violation:
        asm.fail(f"recursive colouring of N(v): {sub_cert.violation}")
    budget = CROWN_FORK(omega - 1)
    asm.place("N(v)", asm.palette("N", budget), {x: sub_cert.colors[k] for x, k in index.items()},
              "recursive", note="clique number drops by one", sub=sub_cert)
    asm.place("v", "M", {v: 0}, "reuse", note="v anticomplete to M(v)")
    return asm.finish(omega, CROWN_FORK, "claw", CROWN_FORK)


def _color_crown_fork(g: Graph) -> ColoredCertificate:
    if g.n == 0:
        return ColoredCertificate("crown-fork", 0, 0, 0, CROWN_FORK.formula, "empty", ())
    return by_components(g, _color_crown_fork_connected, "crown-fork")


def color_crown_fork(g: Graph) -> ColoredCertificate:
    """Colour a (crown, fork)-free graph within ½(w²+w) colours.

    Per component: around a claw centre ``v`` the non-neighbourhood M(v) is
    perfect and takes w colours (``v`` reuses one), and G[N(v)] is coloured
    recursively with clique number at most w-1.
    """
    _require_class(g, ("crown", "fork"))
    return _color_crown_fork(g)


# ---------------------------------------------------------------------------
# (crown, P3+P2)-free


def color_crown_p3p2(g: Graph) -> ColoredCertificate:
    """Colour a connected (crown, P3+P2)-free graph within ½w²+3/2w+1 colours."""
    _require_class(g, ("crown", "p3p2"))
    _require_connected(g)
    claw = pick_claw(g)
    if claw is None:
        return color_claw_free(g, "crown-p3p2", theorem=CROWN_P3P2)
    omega = clique_number(g)[0]
    asm = _Assembly(g, "crown-p3p2")
    if omega <= 3:
        asm.exact("G", asm.palette("G", CROWN_P3P2(omega)), range(g.n), note="small clique number")
        rep = StructureReport(claw.image)
        used = asm.sizes["G"]
        cubic = P3P2_CUBIC(omega)
        rep.add("p3p2-cubic", used <= cubic, "" if used <= cubic else f"chi {used} > {cubic}",
                () if used <= cubic else [("exceeds", used, cubic)])
        asm.report(rep)
        return asm.finish(omega, CROWN_P3P2, "small-omega", CROWN_P3P2)

    part = build_partition(g, claw, "p3p2")
    asm.report(verify_structure_p3p2(g, claw, check_class=False))
    v1 = claw.image[0]
    cells = {k: to_mask(v) for k, v in part.cells.items()}
    asm.exact("N1", asm.palette("N1", CROWN_P3P2(omega) - 2 * omega - 1), bits(cells["N1"]), note=f"v1={v1}")

    _claim_4_3(g, asm, part, cells, omega)

    far = to_mask(part.outside.at_least(2)) | 1 << v1
    asm.stable("v1+N>=2(Q)", asm.palette("far", 1), bits(far))
    return asm.finish(omega, CROWN_P3P2, "claw", CROWN_P3P2)


def _claim_4_3(g: Graph, asm: _Assembly, part, cells: Dict[str, int], omega: int) -> None:
    """Colour N2..N8 within 2w colours following the case analysis on the cell clique numbers."""
    leaves = part.leaves  # (v2, v3, v4)
    # pair cell missing leaf x, and single-trace cell {x}
    pair = {leaves[2]: cells["N2"], leaves[1]: cells["N3"], leaves[0]: cells["N4"]}
    single = {leaves[2]: cells["N6"], leaves[1]: cells["N7"], leaves[0]: cells["N8"]}
    w = {x: _omega(g, pair[x]) for x in leaves}
    order = sorted(leaves, key=lambda x: -w[x])  # stable: ties keep leaf order
    new_v4, new_v3, new_v2 = order
    c2, c3, c4 = pair[new_v4], pair[new_v3], pair[new_v2]
    c6, c7, c8 = single[new_v4], single[new_v3], single[new_v2]
    c5 = cells["N5"]
    w2, w3, w4 = w[new_v4], w[new_v3], w[new_v2]
    relabel = f"leaves (v2,v3,v4)={tuple(leaves)} -> {(new_v2, new_v3, new_v4)}; omegas {w2},{w3},{w4}"

    start = len(asm.budgets)

    def need_empty(mask: int, name: str) -> None:
        if mask:
            asm.fail(f"{name} should be empty in this branch but holds {list(bits(mask))}")

    if w2 >= 4:
        if w3 >= 3:
            branch = "4.3/case1/omega3>=3"
            need_empty(c6, "N6")
            need_empty(c7, "N7")
            asm.perfect("N2+N3", asm.palette("N2+N3", omega), bits(c2 | c3), note=relabel)
            if w4 <= 1:
                asm.stable("N4", asm.palette("N4", 1), bits(c4))
                asm.stable("N5", asm.palette("N5", 1), bits(c5))
                asm.stable("N8", asm.palette("N8", 1), bits(c8))
            else:
                need_empty(c8, "N8")
                asm.perfect("N4+N5", asm.palette("N4+N5", omega - 1), bits(c4 | c5))
        else:
            branch = "4.3/case1/omega3<=2"
            asm.exact("N2+N6", asm.palette("N2+N6", omega - 1), bits(c2 | c6), note=relabel)
            asm.exact("N3+N7", asm.palette("N3+N7", 2), bits(c3 | c7))
            asm.exact("N4+N8", asm.palette("N4+N8", 2), bits(c4 | c8))
            asm.stable("N5", asm.palette("N5", 1), bits(c5))
    elif w2 <= 2 or w3 <= 2:
        branch = "4.3/case2/per-cell"
        asm.exact("N2+N6", asm.palette("N2+N6", 3 if w2 == 3 else 2), bits(c2 | c6), note=relabel)
        asm.exact("N3+N7", asm.palette("N3+N7", 2), bits(c3 | c7))
        asm.exact("N4+N8", asm.palette("N4+N8", 2), bits(c4 | c8))
        asm.stable("N5", asm.palette("N5", 1), bits(c5))
    else:
        # w2 = w3 = 3
        branch = "4.3/case2/perfect-N2+N3"
        need_empty(c6, "N6")
        need_empty(c7, "N7")
        asm.perfect("N2+N3", asm.palette("N2+N3", omega), bits(c2 | c3), note=relabel)
        # w4 = 3 is not covered by the printed sub-branches; N8 is empty there and N4 needs 3
        asm.exact("N4+N8", asm.palette("N4+N8", 3 if w4 == 3 else 2), bits(c4 | c8))
        asm.stable("N5", asm.palette("N5", 1), bits(c5))

    pids = list(asm.budgets)[start:]
    used = sum(asm.sizes[p] for p in pids)
    rep = StructureReport(part.claw.image)
    ok = used <= 2 * omega
    rep.add("t3-3", ok, branch if ok else f"{branch}: {used} colours > 2w = {2 * omega}",
            () if ok else [("exceeds", used, 2 * omega)])
    asm.report(rep)


# ---------------------------------------------------------------------------
# generic layered scheme


def _h_shape(h: Pattern) -> Tuple[int, Optional[int]]:
    """(case, isolated pattern vertex) for H connected (case 1) or connected plus K1 (case 2)."""
    from .graph import components as comps

    if h.graph.n < 3:
        raise ValueError("H needs at least 3 vertices")
    parts = comps(h.graph)
    if len(parts) == 1:
        return 1, None
    if len(parts) == 2:
        small = [p for p in parts if len(p) == 1]
        if small:
            return 2, min(small[0])
    raise ValueError("H must be connected, or connected plus one isolated vertex")


def color_layered_generic(
    g: Graph,
    h: Pattern,
    base: Base = exact_base,
    f: BoundFunction = CLAW_FREE,
) -> ColoredCertificate:
    """Colour a connected (P5, K1+H)-free graph from a base colourer for (P5, H)-free graphs.

    ``base`` must colour any (P5, H)-free graph within ``f`` of its clique
    number.  Around an induced copy Q of H, each N(u) ∩ N(Q) (u in Q) gets its
    own palette of f(w-1) colours, and N²(Q) shares one palette with Q
    itself, extended to max(chi(H), f(w-1)).
    """
    case, isolated = _h_shape(h)
    forbidden = [pattern_catalog("p5"), k1_join(h)]
    verdict = is_free(g, forbidden)
    if not verdict.free:
        w = verdict.witness
        raise NotInClass(f"graph induces {w.pattern.name} at {list(w.image)}", w)
    _require_connected(g)
    chi_h = chromatic_number(h.graph)[0]
    bound = layered_bound(chi_h, h.graph.n, f)
    omega = clique_number(g)[0]
    scheme = f"layered[{h.name}]"
    asm = _Assembly(g, scheme)
    q = find_induced(g, h)
    if q is None:
        asm.via_base("G", asm.palette("G", f(omega)), range(g.n), base)
        return asm.finish(omega, f, "h-free", bound)

    layering = distance_layers(g, q.image)
    rep = StructureReport(q.image)
    check_no_far_layer(g, layering, rep, "eqa-2")
    check_complete_attachers(g, layering, rep, "eqa-3")
    _check_h_free_neighbourhoods(g, q, h, rep)
    if case == 2:
        _check_case_two(g, q, isolated, layering, rep)
    asm.report(rep)

    fw = f(omega - 1)
    nq = to_mask(layering.layer(1))
    done = 0
    for k, u in enumerate(q.image):
        cell = g.rows[u] & nq & ~done
        done |= cell
        asm.via_base(f"N(q{k})", asm.palette(f"N(q{k})", fw), bits(cell), base)
    pid = asm.palette("N2+Q", max(chi_h, fw))
    n2 = to_mask(layering.layer(2))
    for k, comp in enumerate(components_mask(g, n2)):
        asm.via_base(f"N2(Q)[{k}]", pid, bits(comp), base)
    asm.exact("Q", pid, q.image, budget=chi_h, note="exact colouring of H; Q anticomplete to N2(Q)")
    rest = g.full_mask & ~(done | n2 | to_mask(q.image))
    if rest:
        asm.fail(f"vertices {list(bits(rest))} at distance >= 3 from Q")
        asm.exact("rest", asm.palette("rest", 0), bits(rest))
    return asm.finish(omega, bound, f"case{case}", bound)


def _check_h_free_neighbourhoods(g: Graph, q: Embedding, h: Pattern, rep: StructureReport) -> None:
    for u in q.image:
        sub, index = induced_subgraph(g, list(bits(g.rows[u])))
        emb = find_induced(sub, h)
        if emb is not None:
            back = {k: v for v, k in index.items()}
            img = tuple(back[k] for k in emb.image)
            rep.add("nbhd-H-free", False, f"N({u}) induces {h.name}",
                    [("embedding", h.name, img)] + [("adjacent", u, x, True) for x in img])
            return
    rep.add("nbhd-H-free", True)


def _check_case_two(g: Graph, q: Embedding, isolated: int, layering, rep: StructureReport) -> None:
    from .graph import bfs_distances

    vprime = q.image[isolated]
    qprime = [x for k, x in enumerate(q.image) if k != isolated]
    dist_v = bfs_distances(g, vprime)
    d = min(dist_v[x] for x in qprime)
    rep.add("c-1", d == 2, "" if d == 2 else f"shortest path from {vprime} to Q' has {d + 1} vertices",
            () if d == 2 else [("dist-to-set", vprime, tuple(qprime), d)])

    dist = {x: bfs_distances(g, x) for x in qprime}
    fail = None
    for u in sorted(layering.layer(2)):
        du = min((dist[x][u] for x in qprime if dist[x][u] is not None), default=None)
        if du != 2:
            fail = [("distance", u, 2), ("dist-to-set", u, tuple(qprime), du)]
            break
    rep.add("c-2", fail is None, "" if fail is None else "N2(Q) vertex without an ancestor in Q'", fail or ())

    qm = to_mask(qprime)
    n2 = to_mask(layering.layer(2))
    fail = None
    for u in sorted(layering.layer(1)):
        hit = g.rows[u] & n2
        if hit and g.rows[u] & qm == qm:
            w = (hit & -hit).bit_length() - 1
            fail = [("distance", u, 1), ("distance", w, 2), ("adjacent", u, w, True)] + [
                ("adjacent", u, x, True) for x in qprime
            ]
            break
    rep.add("c-3", fail is None, "" if fail is None else "attacher of N2(Q) complete to Q'", fail or ())


SCHEMES: Dict[str, Callable[[Graph], ColoredCertificate]] = {
    "crown-p5": color_crown_p5,
    "crown-fork": color_crown_fork,
    "crown-p3p2": color_crown_p3p2,
    "claw-free": color_claw_free,
}
