import itertools

import pytest

from core.enumeration import (EnumerationError, augment, enumerate_graphs,
                              is_canonical_extension)
from core.graph import Graph, canonical_key

CLASSES = [1, 1, 2, 4, 11, 34, 156, 1044]
CONNECTED = [1, 1, 1, 2, 6, 21, 112, 853]


def brute_force_keys(n):
    pairs = list(itertools.combinations(range(n), 2))
    keys = set()
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        edges = [pair for pair, keep in zip(pairs, chosen) if keep]
        keys.add(canonical_key(Graph.from_edges(n, edges)))
    return keys


def test_class_counts():
    for n, expected in enumerate(CLASSES):
        assert sum(1 for _ in enumerate_graphs(n)) == expected, n


def test_connected_counts():
    for n, expected in enumerate(CONNECTED):
        assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) \
            == expected, n


def test_matches_brute_force():
    for n in range(1, 6):
        keys = [canonical_key(g) for g in enumerate_graphs(n)]
        assert len(keys) == len(set(keys))
        assert set(keys) == brute_force_keys(n)


def test_stream_is_repeatable():
    first = [canonical_key(g) for g in enumerate_graphs(5)]
    second = [canonical_key(g) for g in enumerate_graphs(5)]
    assert first == second


def test_children_are_canonical_extensions():
    parent = Graph.from_edges(3, [(0, 1)])
    key = canonical_key(parent)
    children = list(augment(parent))
    assert children
    assert all(is_canonical_extension(child, key) for child in children)
    assert all(child.n == 4 for child in children)


def test_order_out_of_range():
    with pytest.raises(EnumerationError):
        enumerate_graphs(11)
    with pytest.raises(EnumerationError):
        enumerate_graphs(-1)
