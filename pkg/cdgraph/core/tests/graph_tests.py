import itertools

import networkx as nx
import pytest

from core.graph import (INFINITE, CanonicalKey, Graph, Graph6Error,
                        GraphError, canonical_key, complement, components,
                        cut_vertices, decode_graph6, delete_edges,
                        delete_vertex, diameter, disjoint_union,
                        encode_graph6, induced_subgraph, join,
                        max_two_clique_partition, relabel, to_dot,
                        two_clique_partition)
from core.enumeration import enumerate_graphs
from .test_helpers import K, E, KK, cycle, lewis6, path, star


def test_from_edges_is_symmetric():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert g.has_edge(1, 0)
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 1, 0]
    assert g.edges() == [(0, 1), (1, 2)]


def test_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph(17)
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])


def test_graph6_known_strings():
    assert encode_graph6(K(3)) == 'Bw'
    assert encode_graph6(Graph(0)) == '?'
    assert encode_graph6(E(2)) == 'A?'
    assert decode_graph6('Bw') == K(3)
    assert decode_graph6('>>graph6<<Bw') == K(3)


def test_graph6_errors_carry_offset():
    cases = [('', 0), ('B', 1), ('Bww', 2), ('Bx', 1), ('~??', 0),
             ('B ', 1)]
    for text, offset in cases:
        with pytest.raises(Graph6Error) as info:
            decode_graph6(text)
        assert info.value.offset == offset, text


def test_graph6_rejects_large_orders():
    with pytest.raises(Graph6Error):
        decode_graph6(chr(63 + 17) + '?' * 23)


def test_canonical_key_is_isomorphism_invariant():
    g = path(5)
    h = relabel(g, [4, 2, 0, 3, 1])
    assert g != h
    assert canonical_key(g) == canonical_key(h)
    assert canonical_key(g) != canonical_key(star(4))


def test_canonical_key_order_byte():
    assert canonical_key(Graph(0)).value == b'\x00'
    key = canonical_key(K(5))
    assert key.order == 5
    assert CanonicalKey.fromhex(key.hex()) == key


def test_complement_and_components():
    assert complement(K(4)) == E(4)
    assert components(KK(3, 2)) == [frozenset({0, 1, 2}),
                                    frozenset({3, 4})]
    assert components(Graph(0)) == []


def test_diameter():
    assert diameter(path(4)) == 3
    assert diameter(K(1)) == 0
    assert diameter(Graph(0)) == 0
    assert diameter(E(2)) == INFINITE
    assert diameter(cycle(5)) == 2


def test_cut_vertices():
    assert cut_vertices(path(4)) == {1, 2}
    assert cut_vertices(K(5)) == frozenset()


def test_two_clique_partition():
    assert max_two_clique_partition(K(8)) == (7, 1)
    assert two_clique_partition(K(3)) == (frozenset({0, 1}),
                                          frozenset({2}))
    assert max_two_clique_partition(KK(4, 4)) == (4, 4)
    assert max_two_clique_partition(cycle(5)) is None
    assert max_two_clique_partition(K(1)) is None


def test_join_and_union():
    g = join(K(2), E(2))
    assert g.edge_count() == 1 + 4
    assert disjoint_union(K(2), K(1)) == KK(2, 1)
    assert join(K(3), Graph(0)) == K(3)


def test_induced_subgraph_and_deletions():
    g = cycle(5)
    assert induced_subgraph(g, [0, 1, 2]) == path(3)
    assert delete_vertex(g, 0) == path(4)
    assert delete_edges(g, [(4, 0)]) == path(5)
    with pytest.raises(GraphError):
        delete_edges(g, [(0, 2)])
    with pytest.raises(GraphError):
        delete_vertex(g, 5)


def test_to_dot():
    dot = to_dot(K(2), labels={0: 's', 1: 't'}, name='K2')
    assert dot.splitlines()[0] == 'graph K2 {'
    assert '  0 [label="s"];' in dot
    assert '  0 -- 1;' in dot


def labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pair for i, pair in enumerate(pairs)
                                   if mask >> i & 1])


def test_canonical_key_under_every_relabeling():
    for n in range(1, 7):
        spokes = [(0, i) for i in range(1, n)]
        rim = [(i, i + 1) for i in range(1, n - 1, 2)]
        samples = [path(n), star(n - 1), Graph.from_edges(n, spokes + rim)]
        if n == 6:
            samples.append(lewis6())
        for g in samples:
            keys = {canonical_key(relabel(g, perm))
                    for perm in itertools.permutations(range(n))}
            assert keys == {canonical_key(g)}


def test_canonical_keys_separate_small_graphs():
    for n in range(1, 5):
        keys = {canonical_key(g) for g in labeled_graphs(n)}
        assert len(keys) == [1, 2, 4, 11][n - 1]


def test_complement_is_an_involution():
    for g in labeled_graphs(4):
        assert complement(complement(g)) == g
        assert g.edge_count() + complement(g).edge_count() == 6


def test_graph6_round_trip_on_five_vertices():
    seen = set()
    for g in labeled_graphs(5):
        text = encode_graph6(g)
        assert decode_graph6(text) == g
        seen.add(text)
    assert len(seen) == 1024


def test_join_is_symmetric_with_small_diameter():
    samples = [K(1), E(2), E(3), path(3), KK(2, 1), cycle(5), lewis6()]
    for g1, g2 in itertools.product(samples, repeat=2):
        product = join(g1, g2)
        assert canonical_key(product) == canonical_key(join(g2, g1))
        assert product.edge_count() == (g1.edge_count() + g2.edge_count()
                                        + g1.n * g2.n)
        assert diameter(product) <= 2
    assert diameter(join(E(2), E(3))) == 2


def splits_by_brute_force(g):
    everything = frozenset(range(g.n))
    for size in range(1, g.n):
        for chosen in itertools.combinations(range(g.n), size):
            side = frozenset(chosen)
            if all(g.has_edge(a, b)
                   for part in (side, everything - side)
                   for a, b in itertools.combinations(sorted(part), 2)):
                yield side


def test_two_clique_partition_iff_bipartite_complement():
    for n in range(2, 7):
        for g in enumerate_graphs(n):
            bipartite = nx.is_bipartite(complement(g).to_networkx())
            split = two_clique_partition(g)
            assert (split is not None) == bipartite
            assert any(True for _ in splits_by_brute_force(g)) == bipartite
            if split is None:
                continue
            large, small = split
            assert large | small == frozenset(range(n))
            assert max(len(side) for side in splits_by_brute_force(g)) \
                == len(large)
