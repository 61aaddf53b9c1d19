"""``crownfree`` command line: detect, classify, color, verify, sweep, perfect.

Exit status 0 means success, 1 a usage or input problem, 2 a mathematical
violation (a failed claim or a colouring over its bound).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, Sequence, TextIO, Tuple

from .colorers import SCHEMES, by_components, color_layered_generic
from .certificate import validate_certificate
from .errors import CrownFreeError, FormatError
from .graph import Graph, parse_graph6, write_graph6
from .harness import SweepSpec, check_hole_attachments, sweep
from .oracles import color_perfect, is_perfect
from .patterns import classify, find_induced, pattern_catalog
from .structure import (
    all_claws,
    pick_claw,
    revalidate_report,
    verify_structure_fork,
    verify_structure_p3p2,
)

OK, USAGE, VIOLATION = 0, 1, 2


class UsageError(Exception):
    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which is reserved
        raise UsageError(f"{self.prog}: error: {message}", self.format_usage())


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_graphs(path: Optional[str], stdin: TextIO) -> Iterator[Tuple[int, Graph]]:
    fh = open(path, encoding="ascii", errors="surrogateescape") if path else stdin
    try:
        for lineno, line in enumerate(fh, start=1):
            if line.strip():
                try:
                    yield lineno, parse_graph6(line.strip())
                except FormatError as exc:
                    raise FormatError(exc.message, offset=exc.offset, line=lineno) from None
    finally:
        if path:
            fh.close()


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crownfree", description="Colouring certificates for crown-free graph classes.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def graph_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--in", dest="infile", metavar="FILE", help="graph6 file (default: stdin)")
        sp.add_argument("--json", action="store_true", help="one JSON document per input graph")
        return sp

    sp = graph_cmd("detect", "find an induced copy of a pattern")
    sp.add_argument("--pattern", required=True, help="catalogue or parametric pattern name, e.g. crown, p5, 2k2")
    sp.add_argument("--all", action="store_true", help="list every embedding")

    graph_cmd("classify", "pattern flags and class membership")

    sp = graph_cmd("color", "colour with a certificate")
    sp.add_argument("--scheme", required=True, choices=sorted(SCHEMES) + ["layered"])
    sp.add_argument("--h", dest="h", metavar="PATTERN", help="forbidden graph H for the layered scheme")

    sp = graph_cmd("verify", "check structural claims")
    sp.add_argument("--scheme", required=True, choices=["fork-structure", "p3p2-structure", "hole-attachment"])
    sp.add_argument("--thorough", action="store_true", help="use every claw, not just the first")

    graph_cmd("perfect", "perfection test and optimal colouring of perfect graphs")

    sp = sub.add_parser("sweep", help="run a scheme over a graph source")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", type=int, metavar="N", help="census of all graphs on 1..N vertices (N <= 7)")
    src.add_argument("--g6", metavar="FILE", help="graph6 file")
    src.add_argument("--random", metavar="n,p,seed,count", help="G(n,p) graphs with seeds seed..seed+count-1")
    sp.add_argument("--class", dest="cls", default="all", help="class filter, e.g. crown-p5 or claw-free")
    sp.add_argument("--scheme", default="none", help="colouring or verification scheme to run")
    sp.add_argument("--min-n", type=int, default=1)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--thorough", action="store_true")
    sp.add_argument("--out", metavar="LOG", help="JSONL log path")
    sp.add_argument("--csv", metavar="FILE", help="CSV summary path")
    sp.add_argument("--json", action="store_true")
    return p


# ---------------------------------------------------------------------------
# subcommands; each returns (document, violated)


def _detect(g: Graph, args) -> Tuple[dict, bool]:
    p = pattern_catalog(args.pattern)
    if args.all:
        embs = find_induced(g, p, enumerate=True)
        return {"pattern": p.name, "count": len(embs), "embeddings": [list(e.image) for e in embs]}, False
    e = find_induced(g, p)
    return {"pattern": p.name, "found": e is not None, "embedding": None if e is None else list(e.image)}, False


def _classify(g: Graph, args) -> Tuple[dict, bool]:
    return classify(g).to_dict(), False


def _color(g: Graph, args) -> Tuple[dict, bool]:
    if args.scheme == "layered":
        if not args.h:
            raise UsageError("color --scheme layered needs --h PATTERN")
        h = pattern_catalog(args.h)
        cert = by_components(g, lambda c: color_layered_generic(c, h), f"layered:{h.name}")
    elif args.scheme in ("crown-p5", "crown-p3p2"):
        cert = by_components(g, SCHEMES[args.scheme], args.scheme)
    else:
        cert = SCHEMES[args.scheme](g)
    problems = validate_certificate(g, cert)
    doc = cert.to_dict()
    doc["problems"] = problems
    return doc, bool(problems) or cert.has_violation or cert.palette_size > cert.bound


def _verify(g: Graph, args) -> Tuple[dict, bool]:
    if args.scheme == "hole-attachment":
        results, problems = check_hole_attachments(g)
        return {"instances": results}, bool(problems)
    verifier = verify_structure_fork if args.scheme == "fork-structure" else verify_structure_p3p2
    claws = all_claws(g) if args.thorough else [c for c in [pick_claw(g)] if c is not None]
    reports = [verifier(g, c) for c in claws]
    bad = any(not r.passed or not revalidate_report(g, r) for r in reports)
    return {"claw_free": not claws, "reports": [r.to_dict() for r in reports]}, bad


def _perfect(g: Graph, args) -> Tuple[dict, bool]:
    verdict = is_perfect(g)
    doc = {"perfect": verdict.perfect, "witness": None if verdict.witness is None else verdict.witness.to_dict()}
    if verdict.perfect:
        doc["colors"] = list(color_perfect(g).colors)
    return doc, False


def _human(command: str, doc: dict) -> str:
    if command == "color":
        line = f"{doc['scheme']} [{doc['branch']}]: {doc['palette_size']} colours, bound {doc['bound']} ({doc['bound_formula']})"
        if doc["violation"]:
            line += f"\n  VIOLATION: {doc['violation']}"
        for p in doc["problems"]:
            line += f"\n  problem: {p}"
        return line + f"\n  colours: {' '.join(map(str, doc['colors']))}"
    if command == "classify":
        free = [k for k, v in doc["free"].items() if v]
        member = [k for k, v in doc["classes"].items() if v]
        return f"free of: {', '.join(free) or '-'}\nclasses: {', '.join(member) or '-'}"
    if command == "verify" and "reports" in doc:
        if doc["claw_free"]:
            return "claw-free: nothing to verify"
        out = []
        for r in doc["reports"]:
            out.append(f"claw {r['base']}:")
            out += [f"  {'ok  ' if c['passed'] else 'FAIL'} {c['claim']} {c.get('detail', '')}".rstrip() for c in r["checks"]]
        return "\n".join(out)
    if command == "verify":
        rows = []
        for r in doc["instances"]:
            status = "skip " + r["skipped"] if "skipped" in r else ("ok   " if r["passed"] else "FAIL ") + r["branch"]
            rows.append(f"{r['witness']['kind']} u={r['u']} v={r['v']}: {status}")
        return "\n".join(rows) or "no odd hole or antihole"
    if command == "perfect":
        if doc["perfect"]:
            return f"perfect; colours: {' '.join(map(str, doc['colors']))}"
        w = doc["witness"]
        return f"not perfect: odd {w['kind']} {w['cycle']}"
    if command == "detect":
        if "embeddings" in doc:
            return "\n".join([f"{doc['count']} induced {doc['pattern']}"] + [str(e) for e in doc["embeddings"]])
        return f"{doc['pattern']}: {doc['embedding'] if doc['found'] else 'absent'}"
    return _dump(doc)


_COMMANDS = {"detect": _detect, "classify": _classify, "color": _color, "verify": _verify, "perfect": _perfect}


def _run_sweep(args, stdout: TextIO) -> int:
    rp = None
    if args.random:
        try:
            n, p, seed, count = args.random.split(",")
            rp = (int(n), float(p), int(seed), int(count))
        except ValueError:
            raise UsageError("--random expects n,p,seed,count") from None
    source = "builtin" if args.builtin is not None else ("g6" if args.g6 else "random")
    spec = SweepSpec(
        source=source,
        class_filter=args.cls,
        scheme=args.scheme,
        max_n=args.builtin if args.builtin is not None else 7,
        min_n=args.min_n,
        path=args.g6,
        random_params=rp,
        thorough=args.thorough,
        connected_only=args.connected,
    )
    summary = sweep(spec, out=args.out, csv_out=args.csv)
    doc = summary.to_dict()
    if args.json:
        doc.pop("wall_time")
        stdout.write(_dump(doc) + "\n")
    else:
        stdout.write(
            f"graphs: {summary.graphs_seen}  in class: {summary.in_class}  checked: {summary.checked}  "
            f"violations: {len(summary.violations)}  errors: {len(summary.errors)}  ({summary.wall_time:.1f}s)\n"
        )
        for w, bins in doc["histogram"].items():
            for label, count in bins.items():
                stdout.write(f"  {label}: {count}\n")
        for v in summary.violations:
            stdout.write(f"VIOLATION {v['graph6']}: {v['violation']}\n")
        for e in summary.errors:
            stdout.write(f"error {e['graph6']}: {e['error']}\n")
    return VIOLATION if summary.violations else OK


def run(argv: Optional[Sequence[str]] = None, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "sweep":
            return _run_sweep(args, stdout)
        handler = _COMMANDS[args.command]
        status = OK
        for lineno, g in _read_graphs(args.infile, stdin):
            doc, violated = handler(g, args)
            if violated:
                status = VIOLATION
            if args.json:
                doc = {"graph6": write_graph6(g), "line": lineno, **doc}
                stdout.write(_dump(doc) + "\n")
            else:
                stdout.write(f"# {write_graph6(g)}\n{_human(args.command, doc)}\n")
        return status
    except UsageError as exc:
        stderr.write(exc.usage or parser.format_usage())
        stderr.write(f"{exc}\n")
        return USAGE
    except SystemExit as exc:  # --help
        return OK if exc.code in (0, None) else USAGE
    except (CrownFreeError, OSError, ValueError) as exc:
        stderr.write(f"crownfree: {type(exc).__name__}: {exc}\n")
        return USAGE


def main() -> None:
    sys.exit(run())
