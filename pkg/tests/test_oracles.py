from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from crownfree.errors import NotPerfect
from crownfree.families import antihole, complete, complete_bipartite, cycle, grotzsch, path, petersen
from crownfree.graph import Graph, complement, induced_subgraph
from crownfree.harness import enumerate_graphs
from crownfree.oracles import (
    HoleWitness,
    chromatic_number,
    clique_number,
    color_perfect,
    find_odd_antihole,
    find_odd_hole,
    independence_number,
    is_perfect,
    k_colorable,
    maximal_cliques,
    partition_testers,
)

from helpers import brute_chromatic, brute_clique, graphs


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize("g,omega", [(cycle(5), 2), (complete(4), 4), (grotzsch(), 2), (Graph.empty(0), 0)])
def test_clique_number_examples(g, omega):
    w, witness = clique_number(g)
    assert w == omega and len(witness) == w
    assert all(g.adjacent(a, b) for a, b in combinations(witness, 2))


@pytest.mark.parametrize("g,chi", [(cycle(5), 3), (grotzsch(), 4), (petersen(), 3), (Graph.empty(0), 0), (antihole(7), 4)])
def test_chromatic_number_examples(g, chi):
    k, col = chromatic_number(g)
    assert k == chi and col.is_proper(g) and col.palette_size == chi


def test_k_colorable_examples():
    assert k_colorable(cycle(5), 2) is None
    assert k_colorable(cycle(5), 3).is_proper(cycle(5))
    assert k_colorable(Graph.empty(1), 0) is None
    assert k_colorable(Graph.empty(0), 0).colors == ()


def test_odd_hole_examples():
    w = find_odd_hole(cycle(5))
    assert w is not None and sorted(w.cycle) == list(range(5)) and w.is_valid(cycle(5))
    assert find_odd_hole(complete_bipartite(3, 4)) is None
    assert find_odd_hole(cycle(6)) is None
    assert find_odd_hole(cycle(9)).is_odd


def test_odd_antihole_examples():
    w = find_odd_antihole(antihole(7))
    assert len(w) == 7 and w.kind == "antihole" and w.is_valid(antihole(7))
    assert len(find_odd_antihole(cycle(5))) == 5
    assert find_odd_antihole(path(4)) is None


def test_perfection_examples():
    assert is_perfect(path(4))
    v = is_perfect(cycle(5))
    assert not v and v.witness.kind == "hole" and len(v.witness) == 5
    assert is_perfect(complete_bipartite(3, 3))
    assert color_perfect(complete_bipartite(3, 3)).palette_size == 2
    assert color_perfect(path(4)).palette_size == 2
    with pytest.raises(NotPerfect) as exc:
        color_perfect(cycle(5))
    assert exc.value.witness.is_valid(cycle(5))


def test_witness_validation_rejects_chords():
    assert not HoleWitness((0, 1, 2, 3), "hole").is_valid(complete(4))
    assert not HoleWitness((0, 1, 2), "hole").is_valid(cycle(3))


@pytest.mark.parametrize("k", [5, 7, 9])
def test_odd_holes_and_antiholes_do_not_split(k):
    assert partition_testers(cycle(k)) == (False, False)
    assert partition_testers(antihole(k)) == (False, False)


def test_partition_true_cases():
    assert partition_testers(path(4)) == (True, True)
    assert partition_testers(cycle(4)).splits_into_two_cliques


def test_maximal_cliques_agree_with_networkx():
    for g in (petersen(), grotzsch(), antihole(7)):
        ours = sorted(sorted(c) for c in maximal_cliques(g))
        theirs = sorted(sorted(c) for c in nx.find_cliques(_nx(g)))
        assert ours == theirs


def test_chromatic_number_on_census_up_to_five():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            assert chromatic_number(g)[0] == brute_chromatic(g)
            assert clique_number(g)[0] == brute_clique(g)


@given(graphs(max_n=6))
@settings(max_examples=80, deadline=None)
def test_chromatic_number_matches_exhaustive_assignment(g):
    assert chromatic_number(g)[0] == brute_chromatic(g)


@given(graphs(max_n=12))
@settings(max_examples=80, deadline=None)
def test_clique_number_matches_complement_independence(g):
    w = clique_number(g)[0]
    assert w == independence_number(complement(g))
    assert w == max((len(c) for c in nx.find_cliques(_nx(g))), default=0)


@given(graphs(max_n=10))
@settings(max_examples=80, deadline=None)
def test_hole_witnesses_revalidate(g):
    for w in (find_odd_hole(g), find_odd_antihole(g)):
        if w is not None:
            assert w.is_valid(g) and w.is_odd


def _chi_equals_omega_everywhere(g):
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            sub, _ = induced_subgraph(g, s)
            if chromatic_number(sub)[0] != clique_number(sub)[0]:
                return False
    return True


def test_perfection_matches_definition_on_census():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert bool(is_perfect(g)) == _chi_equals_omega_everywhere(g)


@given(graphs(min_n=7, max_n=7))
@settings(max_examples=25, deadline=None)
def test_perfection_matches_definition_at_seven(g):
    assert bool(is_perfect(g)) == _chi_equals_omega_everywhere(g)
