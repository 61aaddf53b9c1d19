"""Coloured certificates: a colouring plus the palette trace that justifies its size.

A certificate groups vertices into *steps*; each step colours its vertices
from one named palette with local colours ``0..k-1``.  Palettes occupy
disjoint global colour ranges.  Several steps may share a palette only when
their vertex sets are pairwise anticomplete, which is what makes colour
reuse sound.  :func:`validate_certificate` re-checks all of this from the
graph alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from .graph import Graph, induced_subgraph, to_mask
from .oracles import Coloring
from .structure import ClaimCheck, StructureReport, revalidate_check

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class BoundFunction:
    """A chi-binding function evaluated exactly; non-integral values are rejected."""

    id: str
    formula: str
    fn: Callable[[int], Union[int, Fraction]]

    def __call__(self, omega: int) -> int:
        if omega <= 0:
            return 0
        value = Fraction(self.fn(omega))
        if value.denominator != 1:
            raise ValueError(f"{self.id} is not integral at omega={omega}: {value}")
        return int(value)


CROWN_P5 = BoundFunction("crown-p5", "3/2(w^2-w)", lambda w: Fraction(3, 2) * (w * w - w))
CLAW_FREE = BoundFunction("claw-free", "1/2(w^2+w)", lambda w: Fraction(1, 2) * (w * w + w))
CROWN_FORK = BoundFunction("crown-fork", "1/2(w^2+w)", lambda w: Fraction(1, 2) * (w * w + w))
CROWN_P3P2 = BoundFunction("crown-p3p2", "1/2w^2+3/2w+1", lambda w: Fraction(1, 2) * w * w + Fraction(3, 2) * w + 1)
P3P2_CUBIC = BoundFunction("p3p2-cubic", "w(w+1)(w+2)/6", lambda w: Fraction(w * (w + 1) * (w + 2), 6))
CROWN_P3P2_CONJECTURED = BoundFunction(
    "crown-p3p2-conjectured", "1/2w^2+1/2w+1", lambda w: Fraction(1, 2) * (w * w + w) + 1
)


def layered_bound(chi_h: int, size_h: int, f: BoundFunction) -> BoundFunction:
    """``max(chi(H), f(w-1)) + |V(H)| f(w-1)``."""
    return BoundFunction(
        f"layered[{f.id}]",
        f"max({chi_h}, f(w-1)) + {size_h} f(w-1), f={f.formula}",
        lambda w: max(chi_h, f(w - 1)) + size_h * f(w - 1),
    )


@dataclass(frozen=True)
class Palette:
    id: str
    budget: int
    offset: int
    size: int

    def to_dict(self) -> dict:
        return {"id": self.id, "budget": self.budget, "offset": self.offset, "size": self.size}


@dataclass
class Step:
    id: str
    vertices: Tuple[int, ...]
    palette: str
    budget: int
    method: str  # exact | perfect | stable | reuse | recursive
    colors_used: int
    shares_with: Tuple[str, ...] = ()
    note: str = ""
    sub: Optional["ColoredCertificate"] = None

    def to_dict(self) -> dict:
        d = {
            "step": self.id,
            "vertices": list(self.vertices),
            "palette": self.palette,
            "budget": self.budget,
            "method": self.method,
            "colors_used": self.colors_used,
        }
        if self.shares_with:
            d["anticomplete_to"] = list(self.shares_with)
        if self.note:
            d["note"] = self.note
        if self.sub is not None:
            d["sub"] = self.sub.to_dict()
        return d


@dataclass
class ColoredCertificate:
    scheme: str
    n: int
    omega: int
    bound: int
    bound_formula: str
    branch: str
    colors: Tuple[int, ...]
    palettes: List[Palette] = field(default_factory=list)
    trace: List[Step] = field(default_factory=list)
    claims: List[StructureReport] = field(default_factory=list)
    violation: Optional[str] = None
    theorem_bound: Optional[int] = None
    components: List[Tuple[Tuple[int, ...], "ColoredCertificate"]] = field(default_factory=list)

    @property
    def coloring(self) -> Coloring:
        return Coloring(self.colors)

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    @property
    def has_violation(self) -> bool:
        return self.violation is not None

    def all_claims(self) -> List[StructureReport]:
        out = list(self.claims)
        for step in self.trace:
            if step.sub is not None:
                out.extend(step.sub.all_claims())
        for _, comp in self.components:
            out.extend(comp.all_claims())
        return out

    def claims_failed(self) -> List[ClaimCheck]:
        return [c for r in self.all_claims() for c in r.failures]

    def to_dict(self) -> dict:
        d = {
            "scheme": self.scheme,
            "n": self.n,
            "omega": self.omega,
            "bound": self.bound,
            "bound_formula": self.bound_formula,
            "theorem_bound": self.theorem_bound,
            "branch": self.branch,
            "palette_size": self.palette_size,
            "colors": list(self.colors),
            "palettes": [p.to_dict() for p in self.palettes],
            "trace": [s.to_dict() for s in self.trace],
            "claims": [r.to_dict() for r in self.claims],
            "violation": self.violation,
        }
        if self.components:
            d["components"] = [{"vertices": list(vs), "certificate": c.to_dict()} for vs, c in self.components]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ColoredCertificate":
        claims = []
        for r in d.get("claims", []):
            rep = StructureReport(tuple(r["base"]))
            for c in r["checks"]:
                facts = tuple(tuple(f) for f in c.get("witness", []))
                rep.add(c["claim"], c["passed"], c.get("detail", ""), facts)
            claims.append(rep)
        trace = [
            Step(
                id=s["step"],
                vertices=tuple(s["vertices"]),
                palette=s["palette"],
                budget=s["budget"],
                method=s["method"],
                colors_used=s["colors_used"],
                shares_with=tuple(s.get("anticomplete_to", ())),
                note=s.get("note", ""),
                sub=cls.from_dict(s["sub"]) if "sub" in s else None,
            )
            for s in d.get("trace", [])
        ]
        return cls(
            scheme=d["scheme"],
            n=d["n"],
            omega=d["omega"],
            bound=d["bound"],
            bound_formula=d["bound_formula"],
            branch=d["branch"],
            colors=tuple(d["colors"]),
            palettes=[Palette(p["id"], p["budget"], p["offset"], p["size"]) for p in d.get("palettes", [])],
            trace=trace,
            claims=claims,
            violation=d.get("violation"),
            theorem_bound=d.get("theorem_bound"),
            components=[(tuple(c["vertices"]), cls.from_dict(c["certificate"])) for c in d.get("components", [])],
        )


# ---------------------------------------------------------------------------
# validation


def validate_certificate(g: Graph, cert: ColoredCertificate) -> List[str]:
    """Independent re-check of a certificate against ``g``; returns the problems found."""
    problems: List[str] = []
    if cert.n != g.n or len(cert.colors) != g.n:
        return [f"certificate covers {len(cert.colors)} vertices, graph has {g.n}"]
    bad = [(u, v) for u, v in g.edges() if cert.colors[u] == cert.colors[v]]
    if bad:
        problems.append(f"improper colouring on edges {bad[:5]}")
    if cert.violation is None and cert.palette_size > cert.bound:
        problems.append(f"palette size {cert.palette_size} exceeds bound {cert.bound} without a violation")

    for vs, comp in cert.components:
        sub, index = induced_subgraph(g, vs)
        if sorted(vs) != list(vs):
            problems.append("component vertex list not sorted")
        problems += [f"component {list(vs)}: {p}" for p in validate_certificate(sub, comp)]
        if any(cert.colors[v] != comp.colors[index[v]] for v in vs):
            problems.append(f"component {list(vs)} colours differ from the top-level colouring")
        if comp.violation and cert.violation is None:
            problems.append("component violation not propagated")

    for rep in cert.claims:
        for chk in rep.failures:
            if not revalidate_check(g, rep.base, chk):
                problems.append(f"claim {chk.claim} failure witness does not revalidate")
        if not rep.passed and cert.violation is None:
            problems.append("failed claim without a violation")

    # after a violation the colouring may come from the exact fallback, so
    # only properness and witnesses are meaningful
    if cert.trace and cert.violation is None:
        pal = {p.id: p for p in cert.palettes}
        ranges = sorted((p.offset, p.offset + p.size, p.id) for p in cert.palettes)
        for (a0, a1, ai), (b0, b1, bi) in zip(ranges, ranges[1:]):
            if b0 < a1:
                problems.append(f"palettes {ai} and {bi} overlap")
        seen: Dict[int, str] = {}
        by_palette: Dict[str, List[Step]] = {}
        for step in cert.trace:
            p = pal.get(step.palette)
            if p is None:
                problems.append(f"step {step.id} uses undeclared palette {step.palette}")
                continue
            for v in step.vertices:
                if v in seen:
                    problems.append(f"vertex {v} coloured by steps {seen[v]} and {step.id}")
                seen[v] = step.id
                if not p.offset <= cert.colors[v] < p.offset + p.size:
                    problems.append(f"vertex {v} colour {cert.colors[v]} outside palette {p.id}")
            used = len({cert.colors[v] for v in step.vertices})
            if used > step.colors_used:
                problems.append(f"step {step.id} uses {used} colours, records {step.colors_used}")
            if cert.violation is None and step.colors_used > step.budget:
                problems.append(f"step {step.id} exceeds its budget without a violation")
            for earlier in by_palette.get(step.palette, []):
                em = to_mask(earlier.vertices)
                if any(g.rows[v] & em for v in step.vertices):
                    problems.append(f"steps {earlier.id} and {step.id} share palette {step.palette} but touch")
            missing = {e.id for e in by_palette.get(step.palette, [])} - set(step.shares_with)
            if missing:
                problems.append(f"step {step.id} reuses palette {step.palette} without naming {sorted(missing)}")
            by_palette.setdefault(step.palette, []).append(step)
            if step.sub is not None:
                sub, index = induced_subgraph(g, step.vertices)
                problems += [f"step {step.id}: {q}" for q in validate_certificate(sub, step.sub)]
                if any(cert.colors[v] != p.offset + step.sub.colors[index[v]] for v in step.vertices):
                    problems.append(f"step {step.id} colours differ from its sub-certificate")
                if step.sub.violation and cert.violation is None:
                    problems.append("sub-certificate violation not propagated")
        if cert.violation is None:
            if len(seen) != g.n:
                problems.append("trace does not cover every vertex")
            for p in cert.palettes:
                if p.size > p.budget:
                    problems.append(f"palette {p.id} uses {p.size} > budget {p.budget}")
            if sum(p.size for p in cert.palettes) < cert.palette_size:
                problems.append("palette sizes do not account for all colours")
    return problems
