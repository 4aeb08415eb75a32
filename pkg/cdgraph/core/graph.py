"""
Simple graphs on at most sixteen vertices.

A Graph stores one adjacency bitmask per vertex; bit ``j`` of ``adj[i]`` is
set when ``i`` and ``j`` are adjacent. Graphs are values: every operation
returns a new Graph and nothing mutates one in place.
"""
import itertools
import math

import networkx as nx
import pynauty

MAX_VERTICES = 16

INFINITE = math.inf


class GraphError(ValueError):
    pass


class Graph6Error(ValueError):
    """A graph6 string could not be decoded; ``offset`` is the byte at
    which decoding gave up."""

    def __init__(self, message, offset):
        super().__init__("{} at offset {}".format(message, offset))
        self.offset = offset


def bits(mask):
    """Yield the indices of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count('1')


class Graph:
    __slots__ = ('_n', '_adj')

    def __init__(self, n, adj=None):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(
                "A graph has between 0 and {} vertices, not {}".format(
                    MAX_VERTICES, n))
        adj = tuple(adj) if adj is not None else (0,) * n
        if len(adj) != n:
            raise GraphError("Expected {} adjacency rows, got {}".format(
                n, len(adj)))
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError("Row {} names a vertex >= {}".format(v, n))
            if row >> v & 1:
                raise GraphError("Vertex {} has a self-loop".format(v))
            for w in bits(row):
                if not adj[w] >> v & 1:
                    raise GraphError(
                        "Edge {}-{} is not symmetric".format(v, w))
        self._n = n
        self._adj = adj

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError("Bad edge {}-{} for order {}".format(u, v, n))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n):
        return cls(n)

    @classmethod
    def complete(cls, n):
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @property
    def n(self):
        return self._n

    @property
    def adj(self):
        return self._adj

    @property
    def mask(self):
        return (1 << self._n) - 1

    def has_edge(self, u, v):
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v):
        return list(bits(self._adj[v]))

    def degree(self, v):
        return popcount(self._adj[v])

    def degrees(self):
        return [popcount(row) for row in self._adj]

    def edges(self):
        return [(u, v) for u in range(self._n)
                for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self):
        return sum(self.degrees()) // 2

    def is_complete(self):
        return self.edge_count() == self._n * (self._n - 1) // 2

    def distances(self, source):
        """Breadth-first distances from ``source``; None where unreachable."""
        dist = [None] * self._n
        dist[source] = 0
        seen = frontier = 1 << source
        level = 0
        while frontier:
            level += 1
            reached = 0
            for v in bits(frontier):
                reached |= self._adj[v]
            reached &= ~seen
            for v in bits(reached):
                dist[v] = level
            seen |= reached
            frontier = reached
        return dist

    def is_connected(self):
        return self._n <= 1 or None not in self.distances(0)

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return "Graph({!r})".format(encode_graph6(self))


class CanonicalKey:
    """Isomorphism-invariant identity of a graph: the order followed by the
    nauty certificate of the graph."""

    __slots__ = ('_value',)

    def __init__(self, value):
        self._value = bytes(value)

    @classmethod
    def fromhex(cls, text):
        return cls(bytes.fromhex(text))

    @property
    def value(self):
        return self._value

    @property
    def order(self):
        return self._value[0]

    def hex(self):
        return self._value.hex()

    def __eq__(self, other):
        if not isinstance(other, CanonicalKey):
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other):
        return self._value < other._value

    def __le__(self, other):
        return self._value <= other._value

    def __hash__(self):
        return hash(self._value)

    def __repr__(self):
        return "CanonicalKey({})".format(self.hex())


def to_pynauty(g):
    return pynauty.Graph(
        g.n, directed=False,
        adjacency_dict={v: g.neighbors(v) for v in range(g.n)})


def canonical_key(g):
    if g.n == 0:
        return CanonicalKey(b'\x00')
    return CanonicalKey(bytes([g.n]) + pynauty.certificate(to_pynauty(g)))


def complement(g):
    full = g.mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def components(g):
    """Connected components as frozensets, ordered by smallest vertex."""
    found = []
    unseen = g.mask
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        component = frontier = 1 << start
        while frontier:
            reached = 0
            for v in bits(frontier):
                reached |= g.adj[v]
            frontier = reached & ~component
            component |= frontier
        found.append(frozenset(bits(component)))
        unseen &= ~component
    return found


def diameter(g):
    if g.n <= 1:
        return 0
    longest = 0
    for v in range(g.n):
        dist = g.distances(v)
        if None in dist:
            return INFINITE
        longest = max(longest, max(dist))
    return longest


def cut_vertices(g):
    return frozenset(nx.articulation_points(g.to_networkx()))


def two_clique_partition(g):
    """
    Split the vertices into two nonempty cliques, making the first as large
    as possible; ties go to the lexicographically smallest large clique.
    Returns ``(large, small)`` as frozensets, or None when no split exists.

    A split is a proper two-colouring of the complement, so the complement
    must be bipartite and every split comes from orienting the colour
    classes of each complement component.
    """
    if g.n < 2:
        return None
    co = complement(g).to_networkx()
    if not nx.is_bipartite(co):
        return None
    sides = []
    for comp in sorted(nx.connected_components(co), key=min):
        colouring = nx.bipartite.color(co.subgraph(comp))
        first = frozenset(v for v in comp if colouring[v] == 0)
        sides.append((first, frozenset(comp) - first))
    everything = frozenset(range(g.n))
    best = None
    for choice in itertools.product((0, 1), repeat=len(sides)):
        large = frozenset().union(*(side[c] for side, c in zip(sides, choice)))
        small = everything - large
        if not large or not small:
            continue
        rank = (-len(large), sorted(large))
        if best is None or rank < best[0]:
            best = (rank, large, small)
    if best is None:
        return None
    return best[1], best[2]


def max_two_clique_partition(g):
    """Sizes ``(a, b)`` of the split found by two_clique_partition."""
    split = two_clique_partition(g)
    if split is None:
        return None
    return len(split[0]), len(split[1])


def clique_number(g):
    if g.n == 0:
        return 0
    return max(len(clique) for clique in nx.find_cliques(g.to_networkx()))


def encode_graph6(g):
    out = [chr(g.n + 63)]
    value = width = 0
    for j in range(1, g.n):
        for i in range(j):
            value = (value << 1) | (g.adj[i] >> j & 1)
            width += 1
            if width == 6:
                out.append(chr(value + 63))
                value = width = 0
    if width:
        out.append(chr((value << (6 - width)) + 63))
    return ''.join(out)


GRAPH6_HEADER = '>>graph6<<'


def decode_graph6(text):
    start = len(GRAPH6_HEADER) if text.startswith(GRAPH6_HEADER) else 0
    data = text[start:].rstrip('\n')
    if not data:
        raise Graph6Error("Empty graph6 string", start)
    for offset, char in enumerate(data):
        if not 63 <= ord(char) <= 126:
            raise Graph6Error(
                "Character {!r} outside the graph6 range".format(char),
                start + offset)
    if data[0] == '~':
        raise Graph6Error(
            "Orders above {} are not supported".format(MAX_VERTICES), start)
    n = ord(data[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error(
            "Order {} exceeds {}".format(n, MAX_VERTICES), start)
    pairs = n * (n - 1) // 2
    expected = 1 + (pairs + 5) // 6
    if len(data) < expected:
        raise Graph6Error("Truncated graph6 string", start + len(data))
    if len(data) > expected:
        raise Graph6Error("Trailing data", start + expected)

    adj = [0] * n
    position = 0
    for j in range(1, n):
        for i in range(j):
            chunk = ord(data[1 + position // 6]) - 63
            if chunk >> (5 - position % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            position += 1
    if pairs % 6:
        padding = (ord(data[-1]) - 63) & ((1 << (6 - pairs % 6)) - 1)
        if padding:
            raise Graph6Error("Nonzero padding bits", start + len(data) - 1)
    return Graph(n, adj)


def disjoint_union(g1, g2):
    shift = g1.n
    return Graph(g1.n + g2.n,
                 list(g1.adj) + [row << shift for row in g2.adj])


def join(g1, g2):
    """Disjoint union plus every edge between the two parts."""
    shift = g1.n
    left = [row | (g2.mask << shift) for row in g1.adj]
    right = [(row << shift) | g1.mask for row in g2.adj]
    return Graph(g1.n + g2.n, left + right)


def induced_subgraph(g, vertices):
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError("No vertex {} in a graph of order {}".format(
                v, g.n))
    position = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for w in bits(g.adj[v]):
            if w in position:
                row |= 1 << position[w]
        adj.append(row)
    return Graph(len(keep), adj)


def delete_vertex(g, v):
    if not 0 <= v < g.n:
        raise GraphError("No vertex {} in a graph of order {}".format(v, g.n))
    return induced_subgraph(g, [w for w in range(g.n) if w != v])


def delete_edges(g, edges):
    adj = list(g.adj)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not adj[u] >> v & 1:
            raise GraphError("No edge {}-{} to delete".format(u, v))
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def relabel(g, permutation):
    """Move vertex ``v`` to ``permutation[v]``."""
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        target = 0
        for w in bits(row):
            target |= 1 << permutation[w]
        adj[permutation[v]] = target
    return Graph(g.n, adj)


def to_dot(g, labels=None, name='G'):
    labels = labels or {}
    lines = ['graph {} {{'.format(name)]
    for v in range(g.n):
        lines.append('  {} [label="{}"];'.format(v, labels.get(v, v)))
    for u, v in g.edges():
        lines.append('  {} -- {};'.format(u, v))
    lines.append('}')
    return '\n'.join(lines) + '\n'
