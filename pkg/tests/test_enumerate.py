from collections import Counter, defaultdict
from itertools import combinations

import networkx as nx
import pytest

from isodom.enumerate import (
    EnumerationError,
    RejectionBudgetExceeded,
    are_isomorphic,
    canonical_graph,
    enumerate_connected_bipartite,
    enumerate_connected_graphs,
    enumerate_trees,
    make_named,
    random_connected_graph,
    read_graph6_file,
)
from isodom.graph import Graph, GraphError, emit_graph6, is_bipartite, is_connected, is_tree, relabel
from oracles import brute_class_counts, to_nx


@pytest.fixture(scope="module")
def atlas_connected_counts():
    return Counter(g.number_of_nodes() for g in nx.graph_atlas_g() if g.number_of_nodes() and nx.is_connected(g))


def test_small_counts_match_brute_canonicalization():
    for n in range(1, 6):
        connected, trees = brute_class_counts(n)
        assert sum(1 for _ in enumerate_connected_graphs(n)) == connected
        assert sum(1 for _ in enumerate_trees(n)) == trees


def test_counts_match_networkx_atlas(atlas_connected_counts):
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_connected_graphs(n)) == atlas_connected_counts[n]


def test_n3_and_n4_by_hand():
    assert {g.m for g in enumerate_connected_graphs(3)} == {2, 3}
    assert sorted(g.m for g in enumerate_connected_graphs(4)) == [3, 3, 4, 4, 5, 6]


def test_tree_counts_match_networkx():
    for n in range(2, 13):
        assert sum(1 for _ in enumerate_trees(n)) == sum(1 for _ in nx.nonisomorphic_trees(n))
    assert sum(1 for _ in enumerate_trees(7)) == 11
    assert sum(1 for _ in enumerate_trees(8)) == 23


def test_trees_of_order_four_and_one():
    shapes = sorted(sorted(d for _, d in to_nx(t).degree()) for t in enumerate_trees(4))
    assert shapes == [[1, 1, 1, 3], [1, 1, 2, 2]]
    assert list(enumerate_trees(1)) == [Graph(1, (0,))]


def test_pairwise_non_isomorphic_up_to_6():
    for n in range(1, 7):
        gs = [to_nx(g) for g in enumerate_connected_graphs(n)]
        for a, b in combinations(gs, 2):
            assert not nx.is_isomorphic(a, b)


def test_tree_enumeration_pairwise_non_isomorphic():
    for n in range(1, 11):
        buckets = defaultdict(list)
        for t in enumerate_trees(n):
            h = to_nx(t)
            buckets[nx.weisfeiler_lehman_graph_hash(h, iterations=n)].append(h)
        for group in buckets.values():
            for a, b in combinations(group, 2):
                assert not nx.is_isomorphic(a, b)


def test_emitted_graphs_satisfy_filters():
    for n in range(1, 8):
        assert all(is_connected(g) for g in enumerate_connected_graphs(n))
    for n in range(1, 13):
        assert all(is_tree(t) for t in enumerate_trees(n))
    assert all(is_bipartite(g) for g in enumerate_connected_bipartite(6))


def test_enumeration_is_deterministic():
    first = [emit_graph6(g) for g in enumerate_connected_graphs(6)]
    second = [emit_graph6(g) for g in enumerate_connected_graphs(6)]
    assert first == second


def test_range_errors():
    with pytest.raises(EnumerationError):
        list(enumerate_connected_graphs(10))
    with pytest.raises(EnumerationError):
        list(enumerate_connected_graphs(0))
    with pytest.raises(EnumerationError):
        list(enumerate_trees(15))


def test_canonical_graph_is_relabeling_invariant():
    import random

    rng = random.Random(11)
    for g in enumerate_connected_graphs(6):
        perm = list(range(6))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_graph(h) == canonical_graph(g)
        assert are_isomorphic(g, h)


def test_random_connected_graph():
    g = random_connected_graph(5, 0.99, seed=1)
    assert is_connected(g) and g.m >= 8
    assert random_connected_graph(8, 0.3, seed=7) == random_connected_graph(8, 0.3, seed=7)
    assert is_connected(random_connected_graph(8, 0.3, seed=7))
    with pytest.raises(RejectionBudgetExceeded):
        random_connected_graph(30, 0.01, seed=0, max_tries=5)
    with pytest.raises(ValueError):
        random_connected_graph(5, 1.0, seed=0)


def test_make_named():
    assert make_named("star", 3) == Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert make_named("cycle", 4) == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert make_named("complete", 1) == Graph(1, (0,))
    assert make_named("complete_bipartite", 2, 3).m == 6
    with pytest.raises(GraphError):
        make_named("wheel", 4)
    with pytest.raises(GraphError):
        make_named("cycle", 2)


def test_read_graph6_file(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("D?{\n\n@\n")
    assert [g.n for g in read_graph6_file(path)] == [5, 1]
    path.write_text("D?{\nD?\n")
    with pytest.raises(EnumerationError, match=":2:"):
        list(read_graph6_file(path))
