import csv
import json
from itertools import combinations, permutations

import pytest

from crownfree.errors import FormatError, UnsupportedSize
from crownfree.families import complete
from crownfree.graph import Graph, is_connected, write_graph6
from crownfree.harness import (
    SweepSpec,
    canonical_code,
    enumerate_graphs,
    ingest_graph6,
    random_graph,
    read_log,
    revalidate_log,
    sweep,
)
from crownfree.patterns import find_induced, pattern_catalog


def _brute_classes(n, connected_only=False):
    pairs = list(combinations(range(n), 2))
    seen = set()
    for m in range(1 << len(pairs)):
        edges = [e for k, e in enumerate(pairs) if m >> k & 1]
        g = Graph.from_edges(n, edges)
        if connected_only and not is_connected(g):
            continue
        key = min(
            tuple(sorted((min(p[a], p[b]), max(p[a], p[b])) for a, b in edges)) for p in permutations(range(n))
        )
        seen.add(key)
    return len(seen)


def test_census_examples():
    assert len(list(enumerate_graphs(4))) == 11
    assert len(list(enumerate_graphs(4, connected_only=True))) == 6
    assert len(list(enumerate_graphs(1))) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_census_matches_brute_force_dedup(n):
    assert len(list(enumerate_graphs(n))) == _brute_classes(n)
    assert len(list(enumerate_graphs(n, True))) == _brute_classes(n, True)


def test_census_known_counts():
    assert [len(list(enumerate_graphs(n))) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(list(enumerate_graphs(n, True))) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_census_size_limit():
    with pytest.raises(UnsupportedSize):
        list(enumerate_graphs(8))


def test_canonical_code_is_invariant():
    g = random_graph(7, 0.5, 3)
    for perm in list(permutations(range(7)))[::97]:
        rows = [0] * 7
        for u, v in g.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        assert canonical_code(Graph(7, tuple(rows))) == canonical_code(g)


def test_ingest_examples(tmp_path):
    f = tmp_path / "k1.g6"
    f.write_text("@\n")
    got = list(ingest_graph6(f))
    assert len(got) == 1 and got[0].graph == Graph.empty(1)
    f = tmp_path / "three.g6"
    f.write_text("@\nA_\nBw\n")
    assert [s.graph.n for s in ingest_graph6(f)] == [1, 2, 3]
    f = tmp_path / "bad.g6"
    f.write_text("@\nA_\nD!!\nBw\n")
    with pytest.raises(FormatError) as exc:
        list(ingest_graph6(f))
    assert exc.value.line == 3
    assert [s.graph.n for s in ingest_graph6(f, lenient=True)] == [1, 2]


def test_random_graph_examples():
    assert random_graph(5, 0.0, 11) == Graph.empty(5)
    assert random_graph(5, 1.0, 11) == complete(5)
    assert random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42)
    assert random_graph(8, 0.5, 42) != random_graph(8, 0.5, 43)
    with pytest.raises(ValueError):
        random_graph(5, 1.5, 0)


def test_sweep_crown_p5_census():
    s = sweep(SweepSpec("builtin", "crown-p5", "crown-p5", max_n=6))
    assert s.checked == s.in_class > 0 and s.violations == [] and s.errors == []


def test_sweep_fork_structure_thorough():
    s = sweep(SweepSpec("builtin", "crown-fork", "fork-structure", max_n=6, thorough=True, connected_only=True))
    assert s.violations == [] and s.errors == [] and s.in_class > 0


def test_sweep_class_filter_only():
    spec = SweepSpec("random", "crown-present", "none", random_params=(10, 0.5, 1, 300))
    s = sweep(spec)
    crown = pattern_catalog("crown")
    expected = sum(find_induced(random_graph(10, 0.5, 1 + k), crown) is not None for k in range(300))
    assert s.graphs_seen == 300 and s.in_class == expected and s.checked == 0


def test_sweep_log_and_csv(tmp_path):
    log, table = tmp_path / "run.jsonl", tmp_path / "run.csv"
    spec = SweepSpec("builtin", "crown-p3p2", "crown-p3p2", max_n=5, connected_only=True)
    s = sweep(spec, out=log, csv_out=table)
    header, records = read_log(log)
    assert header["spec"]["scheme"] == "crown-p3p2" and len(records) == s.graphs_seen
    assert [r["index"] for r in records] == sorted(r["index"] for r in records)
    assert all("time" not in key for r in records for key in r)
    assert revalidate_log(log) == []
    with open(table) as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == ["n", "graph6", "in_class", "omega", "chi_exact", "colors_used", "bound", "violation"]
    assert len(rows) == s.graphs_seen


def test_sweep_independent_of_worker_count(tmp_path):
    spec = SweepSpec("builtin", "crown-fork", "crown-fork", max_n=5)
    sweep(spec, out=tmp_path / "a.jsonl", workers=1)
    sweep(spec, out=tmp_path / "b.jsonl", workers=2)
    assert (tmp_path / "a.jsonl").read_bytes() == (tmp_path / "b.jsonl").read_bytes()


def test_sweep_records_errors_without_aborting(tmp_path):
    f = tmp_path / "mixed.g6"
    f.write_text("\n".join(write_graph6(g) for g in enumerate_graphs(4)) + "\n")
    # the layered scheme rejects disconnected H-shapes; 2k2 is neither shape
    s = sweep(SweepSpec("g6", "all", "layered:2k2", path=str(f)))
    assert s.graphs_seen == 11 and len(s.errors) > 0


def test_revalidate_log_detects_tampering(tmp_path):
    log = tmp_path / "run.jsonl"
    sweep(SweepSpec("builtin", "claw-free", "claw-free", max_n=4), out=log)
    lines = log.read_text().splitlines()
    for k, line in enumerate(lines[1:], start=1):
        rec = json.loads(line)
        if "certificate" in rec and rec["n"] >= 2 and rec["certificate"]["colors"][0] != rec["certificate"]["colors"][1]:
            rec["certificate"]["colors"] = [0] * rec["n"]
            lines[k] = json.dumps(rec)
            break
    log.write_text("\n".join(lines) + "\n")
    assert revalidate_log(log)


def test_spec_validation():
    with pytest.raises(UnsupportedSize):
        SweepSpec("builtin", max_n=8)
    with pytest.raises(ValueError):
        SweepSpec("random", random_params=(5, 2.0, 0, 1))
    with pytest.raises(ValueError):
        SweepSpec("g6")
