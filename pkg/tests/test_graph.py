from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from edgebetti.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_d,
    path_graph,
    random_tree,
    wheel_graph,
)
from edgebetti.graph import (
    Graph,
    GraphInputError,
    complement,
    components,
    degree,
    degrees,
    elimination_ordering,
    has_induced_c4,
    has_induced_cycle_exhaustive,
    induced_subgraph,
    is_chordal,
    isolated_vertices,
)

from conftest import to_nx


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edge_mask(n, mask)


def test_construction_rejects_bad_input():
    with pytest.raises(GraphInputError, match="loop"):
        Graph.from_edges(3, [(2, 2)])
    with pytest.raises(GraphInputError, match="duplicate"):
        Graph.from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(GraphInputError, match="out of range"):
        Graph.from_edges(3, [(1, 4)])
    with pytest.raises(GraphInputError, match="asymmetric"):
        Graph(2, (0b10, 0))


def test_size_cap_and_override():
    with pytest.raises(GraphInputError, match="allow_large"):
        Graph.from_edges(65, [])
    assert Graph.from_edges(65, [(1, 65)], allow_large=True).num_edges == 1


def test_induced_subgraph_examples():
    p = induced_subgraph(cycle_graph(4), {1, 2, 3})
    assert p.n == 3 and p.edges() == [(1, 2), (2, 3)]

    k2 = induced_subgraph(complete_graph(4), {1, 2})
    assert k2.edges() == [(1, 2)]

    star = induced_subgraph(complete_bipartite_graph(2, 3), {1, 3, 4})
    assert star.edges() == [(1, 2), (1, 3)]
    assert degree(star, 1) == 2
    assert star.labels == (1, 3, 4)


def test_induced_subgraph_keeps_label_map():
    g = path_graph(5)
    h = induced_subgraph(g, [5, 2, 4])
    assert h.labels == (2, 4, 5)
    assert h.edges() == [(2, 3)]  # 4-5 relabelled
    hh = induced_subgraph(h, [2, 3])
    assert hh.labels == (4, 5)


def test_induced_subgraph_out_of_range():
    with pytest.raises(GraphInputError):
        induced_subgraph(cycle_graph(4), {1, 5})


def test_complement_examples():
    assert complement(complete_graph(4)).num_edges == 0
    assert complement(cycle_graph(4)).edges() == [(1, 3), (2, 4)]
    co = complement(complete_bipartite_graph(2, 3))
    assert sorted(map(sorted, components(co))) == [[1, 2], [3, 4, 5]]
    assert co.num_edges == 1 + 3


def test_components_examples():
    two_edges = Graph.from_edges(4, [(1, 2), (3, 4)])
    assert len(components(two_edges)) == 2 and not isolated_vertices(two_edges)
    assert len(components(empty_graph(4))) == 4 and len(isolated_vertices(empty_graph(4))) == 4

    # complement of D: edges ad, ae, bc -> path d-a-e plus edge b-c
    co = complement(graph_d())
    assert co.edges() == [(1, 4), (1, 5), (2, 3)]
    assert sorted(map(sorted, components(co))) == [[1, 4, 5], [2, 3]]
    assert not isolated_vertices(co)


def test_degree_examples():
    assert degree(wheel_graph(4), 5) == 4
    assert degrees(complete_graph(6)) == [5] * 6
    assert degree(empty_graph(3), 2) == 0
    with pytest.raises(GraphInputError):
        degree(cycle_graph(4), 0)


def test_chordal_examples():
    assert is_chordal(complete_graph(6))
    assert not is_chordal(cycle_graph(4))
    for seed in range(10):
        assert is_chordal(random_tree(12, seed))
    assert is_chordal(empty_graph(0))


def test_induced_c4_examples():
    assert has_induced_c4(cycle_graph(4))
    assert has_induced_c4(complete_bipartite_graph(2, 2))
    for seed in range(10):
        assert not has_induced_c4(random_tree(10, seed))
    assert not has_induced_c4(complete_graph(5))
    assert not has_induced_c4(cycle_graph(5))


@given(graphs())
def test_complement_involution_and_edge_duality(g):
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


@given(graphs())
def test_degree_sum(g):
    assert sum(degrees(g)) == 2 * g.num_edges


@given(graphs())
def test_components_partition(g):
    comps = components(g)
    assert sum(len(c) for c in comps) == g.n
    assert set().union(set(), *comps) == set(g.vertices)
    if g.n:
        assert len(comps) == nx.number_connected_components(to_nx(g))
    assert {next(iter(c)) for c in comps if len(c) == 1} == set(isolated_vertices(g))


@given(graphs())
def test_edge_mask_round_trip(g):
    assert Graph.from_edge_mask(g.n, g.edge_mask()) == g


def test_chordality_against_exhaustive_search(atlas):
    # the atlas covers every graph on <= 7 vertices up to isomorphism
    for g in atlas:
        assert is_chordal(g) == (not has_induced_cycle_exhaustive(g)), g
        if g.n:
            assert is_chordal(g) == nx.is_chordal(to_nx(g))


def test_mcs_gives_perfect_elimination_order_when_chordal(atlas):
    for g in atlas:
        if not is_chordal(g):
            continue
        order = elimination_ordering(g)
        assert sorted(order) == list(g.vertices)
        for t, v in enumerate(order):
            later = [u for u in order[t + 1:] if g.has_edge(u, v)]
            assert all(g.has_edge(a, b) for a, b in combinations(later, 2))


def test_induced_c4_against_subset_check(atlas):
    c4 = to_nx(cycle_graph(4))
    for g in atlas:
        h = to_nx(g)
        brute = any(nx.is_isomorphic(h.subgraph(s), c4) for s in combinations(g.vertices, 4))
        assert has_induced_c4(g) == brute
