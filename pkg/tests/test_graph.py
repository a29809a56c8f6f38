import itertools

import pytest
from hypothesis import given

from maglap.combinatorics import maximum_matching
from maglap.errors import (
    BadEdgeId,
    Disconnected,
    DuplicateEdge,
    LoopEdge,
    NotAChord,
    NotAMatching,
    VertexOutOfRange,
)
from maglap.graph import (
    components,
    delete_edge,
    delete_edges,
    from_edge_list,
    fundamental_cycle,
    is_connected,
    spanning_tree,
    spanning_tree_containing_matching,
)
from maglap.dml import cycle_graph

from conftest import graphs


def is_tree(n, edges):
    G = from_edge_list(n, edges)
    return len(edges) == n - 1 and is_connected(G)


def test_k2(k2):
    assert k2.n == 2 and k2.m == 1
    assert k2.degrees == [1, 1]


def test_square_pendants_degrees(square_pendants):
    assert square_pendants.m == 6
    assert square_pendants.degrees == [1, 2, 2, 2, 4, 1]


def test_canonical_orientation_keeps_order():
    G = from_edge_list(3, [(2, 0), (1, 2)])
    assert G.edges == ((0, 2), (1, 2))


@pytest.mark.parametrize(
    "n, pairs, exc",
    [
        (3, [(0, 1), (0, 1)], DuplicateEdge),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(1, 1)], LoopEdge),
        (3, [(0, 3)], VertexOutOfRange),
        (3, [(-1, 2)], VertexOutOfRange),
    ],
)
def test_construction_errors(n, pairs, exc):
    with pytest.raises(exc):
        from_edge_list(n, pairs)


def test_connectivity(k2, square_pendants):
    assert is_connected(k2)
    assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(square_pendants)
    assert components(from_edge_list(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]


def test_delete_edge(k2, square_pendants):
    empty = delete_edge(k2, 0)
    assert empty.n == 2 and empty.m == 0
    e = square_pendants.find_edge(2, 4)
    T = delete_edge(square_pendants, e)
    assert is_tree(T.n, T.edges)
    assert T.edges == tuple(x for x in square_pendants.edges if x != (2, 4))
    with pytest.raises(BadEdgeId):
        delete_edge(k2, 1)
    with pytest.raises(BadEdgeId):
        delete_edge(k2, "0")


def test_deleting_non_matching_edges_of_tree_leaves_k2s():
    T = from_edge_list(7, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (4, 6)])
    M = maximum_matching(T)
    F = delete_edges(T, [e for e in range(T.m) if e not in M])
    comps = components(F)
    assert sorted(len(c) for c in comps) == [1] * (7 - 2 * len(M)) + [2] * len(M)


def test_spanning_tree_chord_counts(square_pendants, hexagon_chords):
    T = from_edge_list(4, [(0, 1), (1, 2), (1, 3)])
    assert spanning_tree(T).chords == ()
    assert len(spanning_tree(square_pendants).chords) == 1
    assert len(spanning_tree(hexagon_chords).chords) == 3
    with pytest.raises(Disconnected):
        spanning_tree(from_edge_list(4, [(0, 1), (2, 3)]))


def test_bfs_tree_is_deterministic(square_pendants):
    D = spanning_tree(square_pendants)
    # BFS from 0 reaches 4, then 2, 3, 5, then 1 through 2; (1, 3) closes the square
    assert [square_pendants.edges[c] for c in D.chords] == [(1, 3)]


def test_spanning_tree_containing_matching_k2(k2):
    D = spanning_tree_containing_matching(k2, {0})
    assert D.tree_edges == {0}


def test_spanning_tree_containing_matching_c4():
    C4 = cycle_graph(4)
    M = {C4.find_edge(0, 1), C4.find_edge(2, 3)}
    D = spanning_tree_containing_matching(C4, M)
    # the four spanning trees of C4 each drop one edge; those containing M drop (1,2) or (0,3)
    candidates = [
        set(range(4)) - {drop}
        for drop in range(4)
        if M <= set(range(4)) - {drop}
    ]
    assert len(candidates) == 2
    assert set(D.tree_edges) in candidates


def test_spanning_tree_containing_matching_keeps_matching_number(hexagon_chords):
    M = maximum_matching(hexagon_chords)
    assert len(M) == 3
    D = spanning_tree_containing_matching(hexagon_chords, M)
    T = from_edge_list(6, [hexagon_chords.edges[e] for e in sorted(D.tree_edges)])
    assert is_tree(T.n, T.edges)
    assert len(maximum_matching(T)) == 3


def test_spanning_tree_containing_matching_errors(k4):
    with pytest.raises(NotAMatching):
        spanning_tree_containing_matching(k4, {k4.find_edge(0, 1), k4.find_edge(1, 2)})
    with pytest.raises(Disconnected):
        spanning_tree_containing_matching(from_edge_list(4, [(0, 1), (2, 3)]), {0})


def test_fundamental_cycle_square(square_pendants):
    D = spanning_tree(square_pendants)
    (c,) = D.chords
    walk = fundamental_cycle(D, c)
    assert walk.is_closed and walk.is_consistent_with(square_pendants)
    assert set(walk.vertices) == {1, 2, 3, 4}
    assert {square_pendants.edges[e] for e in walk.edge_ids()} == {(1, 2), (2, 4), (3, 4), (1, 3)}
    with pytest.raises(NotAChord):
        fundamental_cycle(D, square_pendants.find_edge(0, 4))


def test_fundamental_cycle_c6_and_triangle():
    C6 = cycle_graph(6)
    D = spanning_tree(C6)
    (c,) = D.chords
    assert len(fundamental_cycle(D, c).arcs) == 6
    K3 = cycle_graph(3)
    (c,) = spanning_tree(K3).chords
    assert len(fundamental_cycle(spanning_tree(K3), c).arcs) == 3


@given(graphs(min_n=1, max_n=10, connected=False))
def test_handshake(G):
    assert sum(G.degrees) == 2 * G.m


@given(graphs(min_n=2, max_n=9, connected=False))
def test_delete_edge_counts(G):
    for e in range(G.m):
        H = delete_edge(G, e)
        assert H.n == G.n and H.m == G.m - 1


@given(graphs(min_n=1, max_n=10))
def test_spanning_tree_properties(G):
    D = spanning_tree(G)
    assert len(D.tree_edges) == G.n - 1
    assert len(D.chords) == G.m - G.n + 1
    assert D.tree_edges.isdisjoint(D.chords)
    assert is_tree(G.n, [G.edges[e] for e in D.tree_edges])
    for c in D.chords:
        walk = fundamental_cycle(D, c)
        ids = walk.edge_ids()
        assert walk.is_closed and walk.is_consistent_with(G)
        assert ids.count(c) == 1
        assert all(e in D.tree_edges for e in ids if e != c)
        # simple: no vertex repeats apart from the closing one
        assert len(set(walk.vertices[:-1])) == len(walk.vertices) - 1


@given(graphs(min_n=2, max_n=9))
def test_spanning_tree_contains_any_maximum_matching(G):
    M = maximum_matching(G)
    D = spanning_tree_containing_matching(G, M)
    assert M <= D.tree_edges
    assert len(D.tree_edges) == G.n - 1


def test_all_spanning_trees_of_k4_contain_some_matching(k4):
    # sanity of the exhaustive viewpoint used above: 16 spanning trees of K4
    trees = [s for s in itertools.combinations(range(6), 3) if is_tree(4, [k4.edges[e] for e in s])]
    assert len(trees) == 16
