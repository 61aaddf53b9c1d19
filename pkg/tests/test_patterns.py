import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crownfree.errors import UnknownPattern
from crownfree.families import complete_bipartite, cycle, grotzsch, path, petersen, star
from crownfree.graph import components, induced_subgraph, neighbors
from crownfree.patterns import (
    CATALOG_NAMES,
    class_predicate,
    classify,
    count_induced,
    find_induced,
    is_free,
    k1_join,
    pattern_catalog,
)

from helpers import brute_embedding_count, brute_isomorphic, graphs


def test_crown_shape():
    crown = pattern_catalog("crown")
    assert crown.graph.n == 5 and crown.graph.edge_count() == 7
    assert crown.graph.degree(crown.root) == 4


def test_p3p2_shape():
    g = pattern_catalog("p3p2").graph
    assert (g.n, g.edge_count(), len(components(g))) == (5, 3, 2)


def test_k1_join_of_claw_is_crown():
    assert brute_isomorphic(k1_join(pattern_catalog("claw")).graph, pattern_catalog("crown").graph)


@pytest.mark.parametrize(
    "name,n,m",
    [("fork", 5, 4), ("p5", 5, 4), ("c6", 6, 6), ("k4", 4, 6), ("2k2", 4, 2), ("k1+p4", 5, 7), ("p3|k1", 4, 2)],
)
def test_catalog_shapes(name, n, m):
    g = pattern_catalog(name).graph
    assert (g.n, g.edge_count()) == (n, m)


def test_unknown_pattern():
    for bad in ("crwn", "c2", "", "0k2"):
        with pytest.raises(UnknownPattern):
            pattern_catalog(bad)


def test_find_induced_examples():
    crown = pattern_catalog("crown")
    e = find_induced(crown.graph, crown)
    assert e.image == (0, 1, 2, 3, 4) and e.root_image == 1
    assert find_induced(cycle(5), pattern_catalog("claw")) is None
    claws = find_induced(star(3), pattern_catalog("claw"), enumerate=True)
    assert len({e.vertices() for e in claws}) == 1
    assert len(claws) == 6  # leaf permutations


def test_first_embedding_is_lexicographically_smallest():
    g = petersen()
    p = pattern_catalog("claw")
    every = find_induced(g, p, enumerate=True)
    assert find_induced(g, p).image == min(e.image for e in every)
    assert [e.image for e in every] == sorted(e.image for e in every)


def test_is_free_examples():
    assert is_free(petersen(), [pattern_catalog("crown")])
    assert is_free(grotzsch(), [pattern_catalog("crown"), pattern_catalog("p3p2")])
    assert is_free(cycle(5), [pattern_catalog("p5")])
    v = is_free(path(5), [pattern_catalog("p5")])
    assert not v and v.witness.image == (0, 1, 2, 3, 4)


def test_classify_examples():
    c5 = classify(cycle(5))
    assert all(c5.free_of(p) for p in ("claw", "crown", "p5", "fork", "p3p2"))
    k13 = classify(star(3))
    assert k13.present["claw"] and not k13.present["crown"]
    crown = classify(pattern_catalog("crown").graph)
    assert crown.present["crown"]
    assert not (crown.crown_p5_free or crown.crown_fork_free or crown.crown_p3p2_free)
    assert classify(grotzsch()).crown_p3p2_free


def test_class_predicates():
    assert class_predicate("crown-p5")(complete_bipartite(3, 3))
    assert class_predicate("crown-present")(pattern_catalog("crown").graph)
    assert class_predicate("claw-free")(cycle(7))
    assert class_predicate("p5,c5-free")(path(4))
    with pytest.raises(UnknownPattern):
        class_predicate("bogus-free")


@given(graphs(max_n=8), st.sampled_from(CATALOG_NAMES + ("p3k1", "p4", "c4")))
@settings(max_examples=80, deadline=None)
def test_embeddings_revalidate(g, name):
    p = pattern_catalog(name)
    for e in find_induced(g, p, enumerate=True):
        assert e.is_valid(g)


@given(graphs(max_n=7), st.sampled_from(("claw", "p3k1", "p4", "c4", "diamond", "p3p2", "fork")))
@settings(max_examples=40, deadline=None)
def test_enumeration_count_matches_brute_force(g, name):
    p = pattern_catalog(name)
    assert count_induced(g, p) == brute_embedding_count(g, p.graph)


@given(graphs(max_n=9), st.sampled_from(("claw", "p4", "p3p2", "fork")), st.data())
@settings(max_examples=60, deadline=None)
def test_freeness_is_hereditary(g, name, data):
    p = pattern_catalog(name)
    if not is_free(g, [p]):
        return
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    sub, _ = induced_subgraph(g, s)
    assert is_free(sub, [p])


@given(graphs(max_n=9), st.sampled_from(("claw", "p4", "p3k1", "2k2")))
@settings(max_examples=60, deadline=None)
def test_k1_join_matches_neighbourhood_search(g, name):
    h = pattern_catalog(name)
    joined = k1_join(h)
    apexes = {e.image[0] for e in find_induced(g, joined, enumerate=True)}
    for v in range(g.n):
        sub, _ = induced_subgraph(g, neighbors(g, v))
        assert (v in apexes) == (find_induced(sub, h) is not None)
