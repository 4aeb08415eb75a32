"""
Admissible vertices.

A vertex is admissible when deleting it, or deleting any nonempty set of
its edges, always leaves a graph that does not occur. A graph all of whose
vertices are admissible does not occur either. Whether a smaller graph
occurs is asked of an OccurrenceOracle, which answers from the necessary
conditions, this run's own verdicts and the knowledge base, in that order.
"""
import itertools
import logging
from collections import namedtuple
from types import MappingProxyType

from .conditions import filter_reason
from .eliminators import NO_VERDICT, EliminationVerdict
from .graph import (GraphError, bits, canonical_key, complement,
                    delete_edges, delete_vertex, diameter, encode_graph6)
from .records import NOT_OCCURS, OCCURS, UNKNOWN

logger = logging.getLogger(__name__)

YES = 'YES'
NO = 'NO'
INCONCLUSIVE = 'INCONCLUSIVE'

ADM_ALL = 'ADM-ALL'

# Beyond this many edges inside a neighbourhood the strong check gives up.
STRONG_EDGE_LIMIT = 16


class OracleAnswer(namedtuple('OracleAnswer', 'status provenance')):
    __slots__ = ()


class Evidence(namedtuple('Evidence',
                          'vertex removed graph6 status provenance')):
    """One oracle query made while testing ``vertex``."""
    __slots__ = ()

    def describe(self):
        return "vertex {}: remove {} -> {} {} ({})".format(
            self.vertex, self.removed, self.graph6, self.status,
            self.provenance)


class OccurrenceOracle:
    """
    ``run_state`` maps canonical keys of order ``run_order`` to this run's
    records and is read through a read-only view; graphs of any other order
    are looked up in ``kb``.
    """

    def __init__(self, kb, run_state=None, run_order=None):
        self.kb = kb
        self.run_state = MappingProxyType(dict(run_state or {}))
        self.run_order = run_order
        self.queries = 0

    def __call__(self, g):
        self.queries += 1
        reason = filter_reason(g)
        if reason:
            return OracleAnswer(NOT_OCCURS, "fails {}".format(reason))
        key = canonical_key(g)
        if g.n == self.run_order:
            record = self.run_state.get(key)
            source = 'this run'
        else:
            record = self.kb.get(key) if self.kb is not None else None
            source = 'knowledge base'
        if record is None or record.status == UNKNOWN:
            return OracleAnswer(UNKNOWN, "no verdict in {}".format(source))
        return OracleAnswer(record.status, "{}: {} {}".format(
            source, record.reason, record.provenance).strip())


def occurrence_oracle(g, run_state, kb, run_order=None):
    return OccurrenceOracle(kb, run_state, run_order)(g)


def _combine(answers):
    statuses = {answer for answer in answers}
    if OCCURS in statuses:
        return NO
    if UNKNOWN in statuses:
        return INCONCLUSIVE
    return YES


def _ask(oracle, g, vertex, removed, evidence):
    answer = oracle(g)
    if evidence is not None:
        evidence.append(Evidence(vertex, removed, encode_graph6(g),
                                 answer.status, answer.provenance))
    return answer.status


def _incident_subsets(g, v):
    neighbours = list(bits(g.adj[v]))
    for size in range(1, len(neighbours) + 1):
        for chosen in itertools.combinations(neighbours, size):
            yield [(v, w) for w in chosen]


def is_admissible(g, v, oracle, evidence=None, exhaustive=False,
                  stop_on_unknown=False):
    """YES, NO or INCONCLUSIVE. Stops at the first occurring subgraph
    unless ``exhaustive``, and at the first Unknown one when
    ``stop_on_unknown``."""
    if not 0 <= v < g.n:
        raise GraphError("No vertex {} in a graph of order {}".format(v, g.n))
    queries = itertools.chain(
        [(delete_vertex, v, 'vertex')],
        ((delete_edges, edges, edges) for edges in _incident_subsets(g, v)))
    answers = []
    for operation, argument, removed in queries:
        answers.append(_ask(oracle, operation(g, argument), v, removed,
                            evidence))
        if exhaustive:
            continue
        if answers[-1] == OCCURS:
            return NO
        if answers[-1] == UNKNOWN and stop_on_unknown:
            return INCONCLUSIVE
    return _combine(answers)


def is_strongly_admissible(g, v, oracle, evidence=None):
    status = is_admissible(g, v, oracle, evidence)
    if status != YES:
        return status
    h = delete_vertex(g, v)
    neighbours = [w if w < v else w - 1 for w in bits(g.adj[v])]
    inner = [(a, b) for a, b in itertools.combinations(neighbours, 2)
             if h.has_edge(a, b)]
    if len(inner) > STRONG_EDGE_LIMIT:
        logger.warning("Vertex %d: %d edges among its neighbours, strong "
                       "admissibility not checked", v, len(inner))
        return INCONCLUSIVE
    answers = []
    for size in range(1, len(inner) + 1):
        for edges in itertools.combinations(inner, size):
            answers.append(_ask(oracle, delete_edges(h, edges), v,
                                ('vertex',) + edges, evidence))
            if answers[-1] == OCCURS:
                return NO
    return _combine(answers)


def all_admissible_eliminator(g, oracle):
    if g.n == 0:
        raise ValueError("The empty graph has no vertices to test")
    for v in range(g.n):
        if is_admissible(g, v, oracle, stop_on_unknown=True) != YES:
            return NO_VERDICT
    return EliminationVerdict(ADM_ALL, "every vertex admissible")


class VertexReport(namedtuple('VertexReport', 'vertex status evidence')):
    __slots__ = ()


def admissibility_report(g, oracle):
    """Every query for every vertex, for explaining an ADM-ALL verdict."""
    reports = []
    for v in range(g.n):
        evidence = []
        status = is_admissible(g, v, oracle, evidence, exhaustive=True)
        reports.append(VertexReport(v, status, evidence))
    return reports


# The (4,4) graph eliminated by admissibility: even vertices form one clique,
# odd vertices the other.
SPLIT44_LEFT = (0, 2, 4, 6)
SPLIT44_RIGHT = (1, 3, 5, 7)
SPLIT44_SPECIAL_PAIR = (0, 6)
SPLIT44_CROSS = ((0, 5), (0, 7), (6, 1), (6, 3))
SPLIT44_COMPLEMENT_CYCLE = (0, 6, 5, 4, 3)


def _clique(g, vertices):
    return all(g.has_edge(a, b)
               for a, b in itertools.combinations(vertices, 2))


def split44_problems(g):
    """Structural facts the elimination argument relies on that ``g`` fails;
    empty when all hold."""
    problems = []
    if g.n != 8:
        return ["expected 8 vertices, got {}".format(g.n)]
    if not (_clique(g, SPLIT44_LEFT) and _clique(g, SPLIT44_RIGHT)):
        problems.append("even and odd vertices do not form two 4-cliques")
    cross = sorted(tuple(sorted(e)) for e in g.edges()
                   if (e[0] in SPLIT44_LEFT) != (e[1] in SPLIT44_LEFT))
    if cross != sorted(tuple(sorted(e)) for e in SPLIT44_CROSS):
        problems.append("cross edges are {}".format(cross))
    for side, other in ((SPLIT44_LEFT, SPLIT44_RIGHT),
                        (SPLIT44_RIGHT, SPLIT44_LEFT)):
        for a, b in itertools.combinations(side, 2):
            if (a, b) == SPLIT44_SPECIAL_PAIR:
                continue
            if all(g.has_edge(a, w) or g.has_edge(b, w) for w in other):
                problems.append(
                    "no vertex across from {} and {} misses both".format(a, b))
    for u, w in SPLIT44_CROSS:
        try:
            h = delete_edges(g, [(u, w)])
        except GraphError:
            continue
        right = u if u in SPLIT44_RIGHT else w
        if diameter(h) != 3 or 1 in h.degrees():
            problems.append("deleting {}-{} does not leave diameter 3 with "
                            "minimum degree above 1".format(u, w))
        elif h.distances(right)[4] != 3:
            problems.append("deleting {}-{} leaves {} within 2 of 4".format(
                u, w, right))
    if g.has_edge(*SPLIT44_SPECIAL_PAIR):
        co = complement(delete_edges(g, [SPLIT44_SPECIAL_PAIR]))
        cycle = SPLIT44_COMPLEMENT_CYCLE
        if not all(co.has_edge(cycle[i], cycle[(i + 1) % len(cycle)])
                   for i in range(len(cycle))):
            problems.append("no 5-cycle {} in the complement".format(cycle))
    else:
        problems.append("{} and {} are not adjacent".format(
            *SPLIT44_SPECIAL_PAIR))
    deletions = {canonical_key(delete_vertex(g, v)) for v in range(g.n)}
    if len(deletions) != 3:
        problems.append("{} vertex-deletion classes, expected 3".format(
            len(deletions)))
    return problems
