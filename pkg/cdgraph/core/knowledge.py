"""
The knowledge base: at most one classification record per isomorphism
class, keyed by canonical key.
"""
import logging
import os
from collections import namedtuple

from .constructions import join_closure
from .eliminators import gamma_family_generate
from .graph import Graph, canonical_key, complement, disjoint_union
from .conditions import ComponentPair, filter_reason, palfy_inequality
from .records import (OCCURS, UNKNOWN, ClassificationRecord, KBParseError,
                      parse_lines)

__all__ = ['KBConflictError', 'KBParseError', 'KnowledgeBase', 'kb_load',
           'kb_store', 'kb_seed_builtin', 'kb_seed_external', 'kb_diff',
           'kb_validate']

logger = logging.getLogger(__name__)

SEED = 'SEED'
BUILTIN_MAX_ORDER = 7


class KBConflictError(ValueError):

    def __init__(self, existing, incoming):
        super().__init__(
            "{} recorded as {} ({}) and as {} ({})".format(
                existing.graph6, existing.status,
                existing.provenance or existing.reason,
                incoming.status, incoming.provenance or incoming.reason))
        self.existing = existing
        self.incoming = incoming


class KnowledgeBase:

    def __init__(self, records=()):
        self._records = {}
        for record in records:
            self.add(record)

    def add(self, record):
        """
        Store ``record``. An Unknown record may be replaced by a verdict;
        a second record with the same status is ignored; anything else
        conflicts.
        """
        existing = self._records.get(record.key)
        if existing is None or (existing.status == UNKNOWN
                                and record.status != UNKNOWN):
            self._records[record.key] = record
            return True
        if existing.status == record.status or record.status == UNKNOWN:
            return False
        raise KBConflictError(existing, record)

    def update(self, records):
        return sum(1 for record in records if self.add(record))

    def overlay(self, other):
        merged = KnowledgeBase(self)
        merged.update(other)
        return merged

    def get(self, key):
        return self._records.get(key)

    def lookup(self, g):
        return self._records.get(canonical_key(g))

    def status(self, g):
        record = self.lookup(g)
        return record.status if record is not None else UNKNOWN

    def records(self, order=None, status=None):
        return [record for record in self
                if (order is None or record.order == order)
                and (status is None or record.status == status)]

    def orders(self):
        return sorted({record.order for record in self._records.values()})

    def __contains__(self, key):
        return key in self._records

    def __len__(self):
        return len(self._records)

    def __iter__(self):
        return iter(sorted(self._records.values(),
                           key=lambda r: (r.order, r.graph6)))

    def __repr__(self):
        return "<KnowledgeBase {} records>".format(len(self))


def _paths(path):
    if os.path.isdir(path):
        return [os.path.join(path, name) for name in sorted(os.listdir(path))
                if name.endswith('.txt')]
    return [path]


def kb_load(path):
    """Load a KB file, or every ``*.txt`` file of a directory."""
    kb = KnowledgeBase()
    for filename in _paths(path):
        with open(filename, encoding='utf-8') as f:
            records = list(parse_lines(f, path=filename))
        kb.update(records)
        logger.debug("Loaded %d records from %s", len(records), filename)
    return kb


def kb_store(kb, path, header=None):
    with open(path, 'w', encoding='utf-8') as f:
        if header:
            for line in header.splitlines():
                f.write("# {}\n".format(line))
        for record in kb:
            f.write(record.to_line() + "\n")


def kb_seed_external(path):
    return kb_load(path)


def _occurs(g, provenance, reason=SEED):
    return ClassificationRecord.from_graph(g, OCCURS, reason, provenance)


def bowtie():
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4),
                                (3, 4)])


def octahedron():
    """K_6 minus a perfect matching: the 4-regular graph on six vertices."""
    return complement(Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)]))


def kb_seed_builtin(max_order=BUILTIN_MAX_ORDER):
    """
    Graphs known to occur without reference to any classification: complete
    graphs, Gamma(k, 1), two complete components meeting Palfy's inequality,
    the bowtie, the octahedron, and every join of those up to ``max_order``.
    """
    kb = KnowledgeBase()
    for n in range(1, max_order + 1):
        kb.add(_occurs(Graph.complete(n), "complete graph K_{}".format(n)))
    for k in range(1, max_order):
        kb.add(_occurs(gamma_family_generate(k, 1),
                       "Gamma({}, 1), t = 1 family".format(k)))
    for small in range(1, max_order):
        for large in range(small, max_order - small + 1):
            pair = ComponentPair(small, large)
            if palfy_inequality(pair):
                g = disjoint_union(Graph.complete(large),
                                   Graph.complete(small))
                kb.add(_occurs(g, "K_{} + K_{} satisfies Palfy's "
                                  "inequality".format(large, small)))
    if max_order >= 5:
        kb.add(_occurs(bowtie(), "bowtie"))
    if max_order >= 6:
        kb.add(_occurs(octahedron(), "octahedron, 4-regular on 6 vertices"))
    for n in range(2, max_order + 1):
        kb.update(join_closure(kb, n).values())
    logger.debug("Builtin seed: %d records up to order %d", len(kb),
                 max_order)
    return kb


class KBDiff(namedtuple('KBDiff', 'added removed changed')):
    __slots__ = ()

    def __bool__(self):
        return bool(self.added or self.removed or self.changed)


def kb_diff(old, new):
    """Records only in ``new``, only in ``old``, and (old, new) pairs whose
    status differs."""
    added = [record for record in new if record.key not in old]
    removed = [record for record in old if record.key not in new]
    changed = [(record, new.get(record.key)) for record in old
               if record.key in new
               and new.get(record.key).status != record.status]
    return KBDiff(added, removed, changed)


def kb_validate(kb):
    """Occurs records whose graph fails a necessary condition, with the
    failed condition."""
    problems = []
    for record in kb.records(status=OCCURS):
        reason = filter_reason(record.graph())
        if reason:
            problems.append((record, reason))
    return problems
