"""
Necessary conditions on the prime character degree graph of a solvable
group: Pálfy's three-vertex condition, the odd-cycle-free complement, the
clique signature, and the tests for disconnected graphs.
"""
from collections import namedtuple

import networkx as nx

from .graph import bits, clique_number, complement, components

P1 = 'P1'
P2 = 'P2'
PALFY_INEQ = 'PALFY-INEQ'


class CliqueSignature(namedtuple('CliqueSignature', 'a b')):
    __slots__ = ()

    def __str__(self):
        return "({},{})".format(self.a, self.b)


class ComponentPair(namedtuple('ComponentPair', 'n_small n_large')):
    __slots__ = ()


def palfy_condition(g):
    """True when every three vertices span at least one edge."""
    full = g.mask
    missing = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    for u in range(g.n):
        for v in bits(missing[u] >> (u + 1) << (u + 1)):
            if missing[u] & missing[v]:
                return False
    return True


def odd_cycle_free_complement(g):
    return nx.is_bipartite(complement(g).to_networkx())


def filter_reason(g):
    """The first filter ``g`` fails, or None."""
    if not palfy_condition(g):
        return P1
    if not odd_cycle_free_complement(g):
        return P2
    return None


def signature(g):
    """
    ``(w, n - w)`` with w the size of the largest clique, for graphs covered
    by two cliques. K_n is filed under ``(n - 1, 1)``.
    """
    if g.n < 2 or not odd_cycle_free_complement(g):
        return None
    largest = clique_number(g)
    if largest == g.n:
        return CliqueSignature(g.n - 1, 1)
    return CliqueSignature(largest, g.n - largest)


def _is_clique(g, vertices):
    mask = sum(1 << v for v in vertices)
    return all(((g.adj[v] | (1 << v)) & mask) == mask for v in vertices)


def disconnected_shape(g):
    found = components(g)
    if len(found) != 2 or not all(_is_clique(g, c) for c in found):
        return None
    small, large = sorted(len(c) for c in found)
    return ComponentPair(small, large)


def palfy_inequality(pair):
    return pair.n_large >= 2 ** pair.n_small - 1


def palfy_pairs(n):
    """Component-size pairs of total ``n`` allowed by Pálfy's inequality."""
    pairs = (ComponentPair(a, n - a) for a in range(1, n // 2 + 1))
    return [pair for pair in pairs if palfy_inequality(pair)]


def c(n):
    """max{alpha >= 1 : n >= 2**alpha + alpha - 1}"""
    if n < 2:
        raise ValueError("c(n) needs n >= 2, got {}".format(n))
    alpha = 1
    while n >= 2 ** (alpha + 1) + alpha:
        alpha += 1
    return alpha
