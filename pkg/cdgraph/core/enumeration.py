"""
One graph per isomorphism class, by canonical augmentation.

Every graph of order n is grown from a graph of order n - 1 by adding a
vertex with some neighbourhood. A child is kept only when its new vertex is
the one the child would pick for deletion: among the vertices with the
smallest (degree, neighbour degrees) invariant, the one whose deletion has
the smallest canonical key. All vertices that tie on that choice leave
isomorphic graphs behind, so each class has exactly one parent class, and
de-duplicating the children of a single parent is enough. Nothing is
remembered across parents.
"""
import logging

from .graph import Graph, bits, canonical_key, delete_vertex

logger = logging.getLogger(__name__)

MAX_ORDER = 10


class EnumerationError(ValueError):
    pass


def vertex_invariants(g):
    degrees = g.degrees()
    return [(degrees[v], sorted(degrees[w] for w in bits(g.adj[v])))
            for v in range(g.n)]


def is_canonical_extension(child, parent_key):
    last = child.n - 1
    invariants = vertex_invariants(child)
    best = min(invariants)
    if invariants[last] != best:
        return False
    rivals = [v for v in range(last) if invariants[v] == best]
    return all(parent_key <= canonical_key(delete_vertex(child, v))
               for v in rivals)


def augment(parent):
    """Yield the accepted, pairwise non-isomorphic children of ``parent``."""
    n = parent.n
    parent_key = canonical_key(parent)
    seen = set()
    for neighbourhood in range(1 << n):
        adj = [row | ((neighbourhood >> v & 1) << n)
               for v, row in enumerate(parent.adj)]
        adj.append(neighbourhood)
        child = Graph(n + 1, adj)
        if not is_canonical_extension(child, parent_key):
            continue
        key = canonical_key(child)
        if key not in seen:
            seen.add(key)
            yield child


class GraphStream:
    """
    Iterable over one representative of every isomorphism class of order
    ``order``. Orders below ``order`` are built in memory as parents; the
    final order is streamed. Iteration order is fixed by the parent order
    and the neighbourhood bitmask, so repeated runs agree exactly.
    """

    def __init__(self, order, connected_only=False):
        if not 0 <= order <= MAX_ORDER:
            raise EnumerationError(
                "Order must be between 0 and {}, not {}".format(
                    MAX_ORDER, order))
        self.order = order
        self.connected_only = connected_only

    def __iter__(self):
        if self.order == 0:
            yield Graph(0)
            return
        parents = [Graph(0)]
        for k in range(1, self.order):
            parents = [child for parent in parents
                       for child in augment(parent)]
            logger.debug("Order %d: %d classes", k, len(parents))
        for parent in parents:
            for child in augment(parent):
                if not self.connected_only or child.is_connected():
                    yield child


def enumerate_graphs(order, connected_only=False):
    return GraphStream(order, connected_only=connected_only)
