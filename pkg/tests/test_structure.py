import pytest
from hypothesis import given, settings

from crownfree.errors import Disconnected, InvalidEmbedding, InvalidWitness, NotInClass, PreconditionUnmet
from crownfree.families import antihole, complete_bipartite, cycle, grotzsch, petersen, star
from crownfree.graph import Graph, components, distance_layers, is_stable, neighbors
from crownfree.harness import enumerate_graphs
from crownfree.oracles import HoleWitness
from crownfree.patterns import Embedding, classify, pattern_catalog
from crownfree.structure import (
    StructureReport,
    all_claws,
    build_partition,
    find_bad_edge,
    pick_claw,
    revalidate_check,
    revalidate_report,
    verify_hole_attachment,
    verify_layer_claims,
    verify_structure_fork,
    verify_structure_p3p2,
)

from helpers import graphs

CLAW = pattern_catalog("claw")


def claw_plus(trace):
    """K1,3 on 0..3 (centre 0) plus vertex 4 adjacent to ``trace``."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3)] + [(4, t) for t in trace])


def test_pick_claw_examples():
    assert pick_claw(star(3)).image == (0, 1, 2, 3)
    assert pick_claw(cycle(5)) is None
    c = pick_claw(petersen())
    assert c.root_image == 0 and set(c.image[1:]) == neighbors(petersen(), 0)


def test_partition_cells_by_trace():
    claw = Embedding(CLAW, (0, 1, 2, 3))
    assert 4 in build_partition(claw_plus([1, 2]), claw, "p3p2").cells["N2"]
    assert 4 in build_partition(claw_plus([3]), claw, "p3p2").cells["N6"]
    for scheme in ("fork", "p3p2"):
        assert 4 in build_partition(claw_plus([1, 2, 3]), claw, scheme).cells["N5"]
    part = build_partition(claw_plus([3]), claw, "fork")
    assert part.stray == {4}


def test_partition_rejects_bad_claw():
    with pytest.raises(InvalidEmbedding):
        build_partition(cycle(5), Embedding(CLAW, (0, 1, 2, 3)), "fork")


def test_fork_structure_on_claw_and_k33():
    rep = verify_structure_fork(star(3))
    assert rep.passed and rep.get("M-perfect").passed
    k33 = complete_bipartite(3, 3)
    for claw in all_claws(k33):
        rep = verify_structure_fork(k33, claw)
        assert rep.passed, rep.to_dict()


def test_fork_structure_rejects_crown():
    with pytest.raises(NotInClass) as exc:
        verify_structure_fork(pattern_catalog("crown").graph)
    assert exc.value.witness.pattern.name == "crown"


def test_fork_structure_rejects_disconnected():
    with pytest.raises(Disconnected):
        verify_structure_fork(Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (4, 5)]))


def test_p3p2_structure_examples():
    assert verify_structure_p3p2(claw_plus([1, 2])).passed
    g = grotzsch()
    for claw in all_claws(g):
        rep = verify_structure_p3p2(g, claw)
        assert rep.passed, rep.to_dict()
    with pytest.raises(NotInClass):
        verify_structure_p3p2(pattern_catalog("p3p2").graph)


def test_failure_witness_revalidates():
    # a claim that fails on purpose; the witness must survive independent re-checking
    g = star(3)
    rep = StructureReport((0, 1, 2, 3))
    chk = rep.add("forced", False, "", [("adjacent", 1, 2, False), ("distance", 1, 0)])
    assert revalidate_check(g, rep.base, chk)
    lie = rep.add("forged", False, "", [("adjacent", 1, 2, True)])
    assert not revalidate_check(g, rep.base, lie)
    assert not revalidate_report(g, rep)


# bad edges and hole attachments


def c5_plus(trace):
    return Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, t) for t in trace])


def test_bad_edge_examples():
    hole = HoleWitness((0, 1, 2, 3, 4), "hole")
    be = find_bad_edge(c5_plus([1, 2]), hole, 5)
    assert be.edge == (1, 2)
    assert find_bad_edge(c5_plus([0, 4]), hole, 5).edge == (4, 0)
    assert find_bad_edge(c5_plus(range(5)), hole, 5) is None
    assert find_bad_edge(c5_plus([0, 2]), hole, 5) is None
    with pytest.raises(InvalidWitness):
        find_bad_edge(c5_plus([0, 2]), HoleWitness((0, 1, 2, 3, 5), "hole"), 4)


def c7_host(trace, anti=False):
    base = antihole(7) if anti else cycle(7)
    edges = base.edges() + [(7, t) for t in trace] + [(7, 8)]
    return Graph.from_edges(9, edges), HoleWitness(tuple(range(7)), "antihole" if anti else "hole")


def test_hole_attachment_complete_branch():
    g, c = c7_host(range(7))
    v = verify_hole_attachment(g, c, 7, 8)
    assert v.passed and v.branch == "complete"


def test_hole_attachment_bad_edge_branch():
    g, c = c7_host([3, 4])
    v = verify_hole_attachment(g, c, 7, 8)
    assert v.passed and v.branch == "bad-edge" and v.bad_edge.edge == (3, 4)


def test_hole_attachment_preconditions():
    g, c = c7_host([0])  # single neighbour on the hole induces a fork
    with pytest.raises(PreconditionUnmet) as exc:
        verify_hole_attachment(g, c, 7, 8)
    assert exc.value.hypothesis == "fork-free"
    g, c = c7_host([3, 4])
    with pytest.raises(PreconditionUnmet) as exc:
        verify_hole_attachment(g, c, 8, 7)
    assert exc.value.hypothesis == "u-touches-c"
    with pytest.raises(PreconditionUnmet) as exc:
        verify_hole_attachment(g, c, 7, 3)
    assert exc.value.hypothesis == "edge-outside"
    with pytest.raises(PreconditionUnmet) as exc:
        verify_hole_attachment(g, HoleWitness(tuple(range(6)), "hole"), 7, 8)
    assert exc.value.hypothesis == "witness"
    g5 = Graph.from_edges(7, antihole(5).edges() + [(5, t) for t in range(5)] + [(5, 6)])
    with pytest.raises(PreconditionUnmet) as exc:
        verify_hole_attachment(g5, HoleWitness(tuple(range(5)), "antihole"), 5, 6)
    assert exc.value.hypothesis == "antihole-length"


def test_hole_attachment_antihole_profiles():
    passed = 0
    for trace_mask in range(1, 1 << 7):
        g, c = c7_host([i for i in range(7) if trace_mask >> i & 1], anti=True)
        try:
            v = verify_hole_attachment(g, c, 7, 8)
        except PreconditionUnmet as exc:
            assert exc.hypothesis == "fork-free"
            continue
        assert v.passed and v.branch == "complete"
        passed += 1
    assert passed == 1


# literalized structure statements over the census and random graphs


def _connected_members(cls, max_n=7):
    for n in range(2, max_n + 1):
        for g in enumerate_graphs(n, connected_only=True):
            if classify(g).member(cls):
                yield g


def _check_fork_invariants(g):
    for claw in all_claws(g):
        rep = verify_structure_fork(g, claw)
        assert rep.passed, rep.to_dict()
        part = build_partition(g, claw, "fork")
        assert part.is_disjoint() and part.covered() | part.stray == part.expected_cover()
        assert not part.stray


def _check_p5_invariants(g):
    for claw in all_claws(g):
        lay = distance_layers(g, claw.image)
        assert not lay.layer(3)
        for comp in components(g, lay.layer(2)):
            for u in lay.layer(1):
                if any(g.adjacent(u, w) for w in comp):
                    assert all(g.adjacent(u, w) for w in comp)
        assert verify_layer_claims(g, claw).passed


def _check_p3p2_invariants(g):
    for claw in all_claws(g):
        lay = distance_layers(g, claw.image)
        assert is_stable(g, lay.at_least(2))
        part = build_partition(g, claw, "p3p2")
        assert part.is_disjoint() and part.covered() == part.expected_cover()
        rep = verify_structure_p3p2(g, claw)
        assert rep.passed, rep.to_dict()


def test_fork_structure_over_census():
    for g in _connected_members("crown-fork"):
        _check_fork_invariants(g)


def test_p5_layers_over_census():
    for g in _connected_members("crown-p5"):
        _check_p5_invariants(g)


def test_p3p2_structure_over_census():
    for g in _connected_members("crown-p3p2"):
        _check_p3p2_invariants(g)


@given(graphs(min_n=8, max_n=8, connected=True))
@settings(max_examples=150, deadline=None)
def test_structure_statements_at_eight(g):
    flags = classify(g)
    if flags.member("crown-fork"):
        _check_fork_invariants(g)
    if flags.member("crown-p5"):
        _check_p5_invariants(g)
    if flags.member("crown-p3p2"):
        _check_p3p2_invariants(g)


@given(graphs(min_n=4, max_n=9))
@settings(max_examples=100, deadline=None)
def test_report_witnesses_revalidate_on_arbitrary_graphs(g):
    for claw in all_claws(g)[:3]:
        for verifier in (verify_structure_fork, verify_structure_p3p2):
            rep = verifier(g, claw, check_class=False)
            assert revalidate_report(g, rep)
