"""
Partitions of a diameter-three graph relative to a pair of vertices at
distance three, and the two growth conditions an occurring graph must meet
under every such partition.
"""
from collections import namedtuple

from .conditions import odd_cycle_free_complement
from .graph import diameter

RHO3 = 'D3-RHO3'
GROWTH = 'D3-GROWTH'


class RhoPartitionError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class RhoPartition(namedtuple('RhoPartition', 'p q rho1 rho2 rho3 rho4')):
    """
    rho4: vertices at distance 3 from p (q among them).
    rho3: vertices at distance 2 from p.
    rho2: neighbours of p with a neighbour in rho3.
    rho1: p and its remaining neighbours.
    """
    __slots__ = ()

    @property
    def near(self):
        return self.rho1 | self.rho2

    @property
    def far(self):
        return self.rho3 | self.rho4

    def follows_convention(self):
        return len(self.near) <= len(self.far)


class Diameter3Result(namedtuple('Diameter3Result', 'reason partition')):
    __slots__ = ()

    @property
    def eliminated(self):
        return self.reason is not None


PASS = Diameter3Result(None, None)


def rho_partition(g, p, q, dist=None):
    if dist is None:
        dist = g.distances(p)
    if dist[q] != 3:
        raise RhoPartitionError(
            "Vertices {} and {} are at distance {}, not 3".format(
                p, q, dist[q]))
    if any(d is None or d > 3 for d in dist):
        raise RhoPartitionError(
            "Some vertex is farther than 3 from {}".format(p))
    rho4 = frozenset(v for v, d in enumerate(dist) if d == 3)
    rho3 = frozenset(v for v, d in enumerate(dist) if d == 2)
    rho3_mask = sum(1 << v for v in rho3)
    rho2 = frozenset(v for v, d in enumerate(dist)
                     if d == 1 and g.adj[v] & rho3_mask)
    rho1 = frozenset(v for v, d in enumerate(dist)
                     if d == 0 or (d == 1 and v not in rho2))
    return RhoPartition(p, q, rho1, rho2, rho3, rho4)


def violation(partition):
    if len(partition.rho3) < 3:
        return RHO3
    if len(partition.far) < 2 ** len(partition.near):
        return GROWTH
    return None


def labelings(g, strict=False):
    """
    Partitions to evaluate: both labelings of every distance-3 pair that
    satisfy |rho1 + rho2| <= |rho3 + rho4|. In strict mode only the labelings
    of a pair with the smaller |rho1 + rho2| are kept (both when tied).
    """
    dist = [g.distances(v) for v in range(g.n)]
    for p in range(g.n):
        for q in range(p + 1, g.n):
            if dist[p][q] != 3:
                continue
            pair = [rho_partition(g, p, q, dist[p]),
                    rho_partition(g, q, p, dist[q])]
            eligible = [part for part in pair if part.follows_convention()]
            if strict and eligible:
                smallest = min(len(part.near) for part in pair)
                eligible = [part for part in eligible
                            if len(part.near) == smallest]
            for part in eligible:
                yield part


def check_preconditions(g):
    if not g.is_connected() or diameter(g) != 3:
        raise PreconditionError("Graph must be connected of diameter 3")
    if not odd_cycle_free_complement(g):
        raise PreconditionError("Graph complement must be bipartite")


def violations(g, strict=False):
    """Every evaluated partition with the condition it violates."""
    check_preconditions(g)
    found = []
    for part in labelings(g, strict):
        reason = violation(part)
        if reason:
            found.append(Diameter3Result(reason, part))
    return found


def diameter3_test(g, strict=False):
    check_preconditions(g)
    for part in labelings(g, strict):
        reason = violation(part)
        if reason:
            return Diameter3Result(reason, part)
    return PASS
