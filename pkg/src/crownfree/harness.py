"""Graph sources, class filtering and bound sweeps with JSONL certificate logs."""

from __future__ import annotations

import csv
import json
import logging
import os
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .certificate import CROWN_P3P2_CONJECTURED, SCHEMA_VERSION, ColoredCertificate, validate_certificate
from .colorers import SCHEMES, by_components, color_layered_generic
from .errors import CrownFreeError, FormatError, PreconditionUnmet, UnsupportedSize
from .graph import Graph, bits, is_connected, parse_graph6, write_graph6
from .oracles import chromatic_number, clique_number, find_odd_antihole, find_odd_hole
from .patterns import class_predicate, pattern_catalog
from .structure import (
    StructureReport,
    all_claws,
    iter_attachment_instances,
    pick_claw,
    revalidate_report,
    verify_hole_attachment,
    verify_structure_fork,
    verify_structure_p3p2,
)

log = logging.getLogger(__name__)

CENSUS_MAX_N = 7
THREADS_ENV = "CHI_CROWN_THREADS"


# ---------------------------------------------------------------------------
# canonical forms and the built-in census


def _refine(g: Graph) -> List[int]:
    """Colour refinement started from degrees; colour ids are isomorphism-invariant."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in bits(g.rows[v])))) for v in range(g.n)]
        ranking = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _code(g: Graph, order: Sequence[int]) -> int:
    code = 0
    rows = g.rows
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_code(g: Graph) -> int:
    """Largest upper-triangle code over all vertex orders compatible with the refined colouring."""
    colors = _refine(g)
    cells: Dict[int, List[int]] = defaultdict(list)
    for v, c in enumerate(colors):
        cells[c].append(v)
    groups = [cells[c] for c in sorted(cells)]
    best = -1
    for parts in product(*(permutations(grp) for grp in groups)):
        order = [v for part in parts for v in part]
        c = _code(g, order)
        if c > best:
            best = c
    return best


def from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    k = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def canonical_form(g: Graph) -> Graph:
    return from_code(g.n, canonical_code(g))


@lru_cache(maxsize=None)
def _census(n: int) -> Tuple[int, ...]:
    if n <= 1:
        return (0,) if n >= 0 else ()
    codes = set()
    for parent_code in _census(n - 1):
        parent = from_code(n - 1, parent_code)
        for nbrs in range(1 << (n - 1)):
            rows = list(parent.rows)
            for u in bits(nbrs):
                rows[u] |= 1 << (n - 1)
            rows.append(nbrs)
            codes.add(canonical_code(Graph(n, tuple(rows))))
    return tuple(sorted(codes))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class on ``n`` vertices, in canonical-code order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > CENSUS_MAX_N:
        raise UnsupportedSize(
            f"built-in census stops at n={CENSUS_MAX_N}; supply larger censuses as graph6 files"
        )
    for code in _census(n):
        g = from_code(n, code)
        if not connected_only or is_connected(g):
            yield g


# ---------------------------------------------------------------------------
# other sources


@dataclass(frozen=True)
class SourcedGraph:
    index: int
    graph: Graph
    origin: str  # "census n=5 #3", "file.g6:12", "random seed=7"


def ingest_graph6(path, lenient: bool = False) -> Iterator[SourcedGraph]:
    """Stream graphs from a graph6 file, one per non-blank line.

    Strict mode raises :class:`FormatError` carrying the line number; lenient
    mode logs the error and stops, keeping what was read so far.
    """
    name = os.fspath(path)
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        k = 0
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                g = parse_graph6(line.strip())
            except FormatError as exc:
                err = FormatError(f"{name}: {exc.message}", offset=exc.offset, line=lineno)
                if lenient:
                    log.warning("%s", err)
                    return
                raise err from None
            except UnsupportedSize as exc:
                if lenient:
                    log.warning("%s:%d: %s", name, lineno, exc)
                    return
                raise FormatError(f"{name}: {exc}", line=lineno) from None
            yield SourcedGraph(k, g, f"{name}:{lineno}")
            k += 1


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) drawn with ``random.Random(seed)``.

    Pairs are visited column by column (j = 1..n-1, i = 0..j-1) and an edge
    is kept when the next ``random()`` draw is below ``p``; Mersenne Twister
    output for a given integer seed is the same on every platform.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepSpec:
    source: str  # "builtin" | "g6" | "random"
    class_filter: str = "all"
    scheme: str = "none"
    max_n: int = CENSUS_MAX_N
    min_n: int = 1
    path: Optional[str] = None
    random_params: Optional[Tuple[int, float, int, int]] = None  # n, p, seed, count
    thorough: bool = False
    connected_only: bool = False

    def __post_init__(self) -> None:
        if self.source == "builtin" and self.max_n > CENSUS_MAX_N:
            raise UnsupportedSize(f"built-in census stops at n={CENSUS_MAX_N}")
        if self.source == "random":
            if self.random_params is None:
                raise ValueError("random source needs (n, p, seed, count)")
            if not 0.0 <= self.random_params[1] <= 1.0:
                raise ValueError("edge probability must lie in [0, 1]")
        if self.source == "g6" and not self.path:
            raise ValueError("g6 source needs a path")
        if self.source not in ("builtin", "g6", "random"):
            raise ValueError(f"unknown source {self.source!r}")

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["random_params"] is not None:
            d["random_params"] = list(d["random_params"])
        return d


def iter_source(spec: SweepSpec) -> Iterator[SourcedGraph]:
    if spec.source == "builtin":
        k = 0
        for n in range(spec.min_n, spec.max_n + 1):
            for j, g in enumerate(enumerate_graphs(n)):
                yield SourcedGraph(k, g, f"census n={n} #{j}")
                k += 1
    elif spec.source == "g6":
        yield from ingest_graph6(spec.path)
    else:
        n, p, seed, count = spec.random_params  # type: ignore[misc]
        for k in range(count):
            yield SourcedGraph(k, random_graph(n, p, seed + k), f"random n={n} p={p} seed={seed + k}")


SCHEME_NAMES = (
    "none",
    "crown-p5",
    "crown-fork",
    "crown-p3p2",
    "claw-free",
    "layered:<pattern>",
    "fork-structure",
    "p3p2-structure",
    "hole-attachment",
    "p3p2-conjecture",
)


def _run_colorer(g: Graph, scheme: str) -> ColoredCertificate:
    if scheme.startswith("layered:"):
        h = pattern_catalog(scheme.split(":", 1)[1])
        return by_components(g, lambda c: color_layered_generic(c, h), scheme)
    fn = SCHEMES[scheme]
    if scheme in ("crown-p5", "crown-p3p2"):
        return by_components(g, fn, scheme)
    return fn(g)


def _verify(g: Graph, scheme: str, thorough: bool) -> Tuple[List[StructureReport], List[str]]:
    verifier = verify_structure_fork if scheme == "fork-structure" else verify_structure_p3p2
    claws = all_claws(g) if thorough else [c for c in [pick_claw(g)] if c is not None]
    reports = [verifier(g, c) for c in claws]
    problems = []
    for r in reports:
        for c in r.failures:
            problems.append(f"claw {list(r.base)}: {c.claim} failed ({c.detail})")
        if not revalidate_report(g, r):
            problems.append(f"claw {list(r.base)}: a failure witness does not revalidate")
    return reports, problems


def check_hole_attachments(g: Graph) -> Tuple[List[dict], List[str]]:
    """Run the attachment check for every (u, v) around the first odd hole and odd antihole.

    Instances whose hypotheses fail are recorded as skipped, not as problems.
    """
    results, problems = [], []
    for w in (find_odd_hole(g), find_odd_antihole(g)):
        if w is None:
            continue
        for u, v in iter_attachment_instances(g, w):
            try:
                verdict = verify_hole_attachment(g, w, u, v)
            except PreconditionUnmet as exc:
                results.append({"witness": w.to_dict(), "u": u, "v": v, "skipped": exc.hypothesis})
                continue
            results.append({"witness": w.to_dict(), "u": u, "v": v, **verdict.to_dict()})
            if not verdict.passed:
                problems.append(f"{w.kind} {list(w.cycle)} with u={u}, v={v}: {verdict.detail}")
    return results, problems


def evaluate(item: SourcedGraph, spec: SweepSpec) -> dict:
    """Run the sweep's class filter and scheme on one graph; never raises for per-graph failures."""
    g = item.graph
    rec: Dict[str, Any] = {"index": item.index, "origin": item.origin, "n": g.n, "graph6": write_graph6(g)}
    in_class = class_predicate(spec.class_filter)(g)
    if spec.connected_only and not is_connected(g):
        in_class = False
    rec["in_class"] = in_class
    if not in_class or spec.scheme == "none":
        return rec
    try:
        omega = clique_number(g)[0]
        chi = chromatic_number(g)[0]
        rec["omega"], rec["chi_exact"] = omega, chi
        problems: List[str] = []
        s = spec.scheme
        if s in SCHEMES or s.startswith("layered:"):
            cert = _run_colorer(g, s)
            rec["colors_used"] = cert.palette_size
            rec["bound"] = cert.bound
            rec["theorem_bound"] = cert.theorem_bound
            rec["certificate"] = cert.to_dict()
            if cert.violation:
                problems.append(cert.violation)
            problems += validate_certificate(g, cert)
            if cert.palette_size < chi:
                problems.append("palette smaller than the chromatic number")
            if cert.palette_size > cert.bound:
                problems.append(f"{cert.palette_size} colours exceed the bound {cert.bound}")
            if cert.theorem_bound is not None and omega >= 2 and cert.palette_size > cert.theorem_bound:
                problems.append(f"{cert.palette_size} colours exceed the theorem bound {cert.theorem_bound}")
        elif s in ("fork-structure", "p3p2-structure"):
            reports, problems = _verify(g, s, spec.thorough)
            rec["claws_checked"] = len(reports)
            rec["reports"] = [r.to_dict() for r in reports]
        elif s == "hole-attachment":
            results, problems = check_hole_attachments(g)
            rec["attachments"] = results
        elif s == "p3p2-conjecture":
            rec["bound"] = CROWN_P3P2_CONJECTURED(omega)
            if chi > rec["bound"]:
                problems.append(f"chi {chi} exceeds 1/2w^2+1/2w+1 = {rec['bound']}")
        else:
            raise ValueError(f"unknown scheme {s!r}")
        rec["violation"] = "; ".join(problems) or None
    except (CrownFreeError, ValueError) as exc:
        rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec


@dataclass
class SweepSummary:
    graphs_seen: int = 0
    in_class: int = 0
    checked: int = 0
    errors: List[dict] = field(default_factory=list)
    violations: List[dict] = field(default_factory=list)
    histogram: Dict[int, Dict[str, int]] = field(default_factory=dict)
    wall_time: float = 0.0

    def add(self, rec: dict) -> None:
        self.graphs_seen += 1
        if not rec.get("in_class"):
            return
        self.in_class += 1
        if "error" in rec:
            self.errors.append({"graph6": rec["graph6"], "error": rec["error"]})
            return
        if "omega" not in rec:
            return
        self.checked += 1
        if rec.get("violation"):
            self.violations.append(
                {"graph6": rec["graph6"], "violation": rec["violation"], "certificate": rec.get("certificate")}
            )
        key = (rec["omega"], rec["chi_exact"], rec.get("colors_used"), rec.get("bound"))
        label = "w={} chi={} colors={} bound={}".format(*key)
        self.histogram.setdefault(rec["omega"], {})
        self.histogram[rec["omega"]][label] = self.histogram[rec["omega"]].get(label, 0) + 1

    def to_dict(self) -> dict:
        return {
            "graphs_seen": self.graphs_seen,
            "in_class": self.in_class,
            "checked": self.checked,
            "violations": self.violations,
            "errors": self.errors,
            "histogram": {str(k): dict(sorted(v.items())) for k, v in sorted(self.histogram.items())},
            "wall_time": round(self.wall_time, 3),
        }


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", THREADS_ENV, raw)
    return 1


def _evaluate_packed(args) -> dict:
    return evaluate(*args)


def sweep(spec: SweepSpec, out: Optional[os.PathLike] = None, csv_out: Optional[os.PathLike] = None,
          workers: Optional[int] = None) -> SweepSummary:
    """Evaluate every graph from the sweep's source.

    Records are produced in source order whatever the worker count, so the
    JSONL log is byte-identical across runs.
    """
    t0 = time.perf_counter()
    items = list(iter_source(spec))
    nw = _worker_count(workers)
    if nw > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=nw) as pool:
            records = list(pool.map(_evaluate_packed, [(it, spec) for it in items], chunksize=16))
    else:
        records = [evaluate(it, spec) for it in items]
    records.sort(key=lambda r: r["index"])
    summary = SweepSummary()
    for rec in records:
        summary.add(rec)
    if out is not None:
        write_log(out, spec, records)
    if csv_out is not None:
        write_csv(csv_out, records)
    summary.wall_time = time.perf_counter() - t0
    return summary


def write_log(path, spec: SweepSpec, records: Sequence[dict]) -> None:
    header = {"schema": "crownfree.sweep", "version": SCHEMA_VERSION, "spec": spec.to_dict()}
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(header, sort_keys=True, separators=(",", ":")) + "\n")
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")


CSV_COLUMNS = ("n", "graph6", "in_class", "omega", "chi_exact", "colors_used", "bound", "violation")


def write_csv(path, records: Sequence[dict]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for rec in records:
            w.writerow(["" if rec.get(c) is None else rec.get(c) for c in CSV_COLUMNS])


def read_log(path) -> Tuple[dict, List[dict]]:
    with open(path, encoding="utf-8") as fh:
        lines = [json.loads(line) for line in fh if line.strip()]
    if not lines or lines[0].get("schema") != "crownfree.sweep":
        raise FormatError(f"{path}: missing sweep log header", line=1)
    return lines[0], lines[1:]


def revalidate_log(path) -> List[str]:
    """Reload a sweep log and re-check every certificate and report witness."""
    _, records = read_log(path)
    problems = []
    for rec in records:
        g = parse_graph6(rec["graph6"])
        if "certificate" in rec:
            cert = ColoredCertificate.from_dict(rec["certificate"])
            for p in validate_certificate(g, cert):
                problems.append(f"{rec['graph6']}: {p}")
        for r in rec.get("reports", []):
            rep = StructureReport(tuple(r["base"]))
            for c in r["checks"]:
                rep.add(c["claim"], c["passed"], c.get("detail", ""), tuple(tuple(f) for f in c.get("witness", [])))
            if not revalidate_report(g, rep):
                problems.append(f"{rec['graph6']}: report witness does not revalidate")
    return problems
