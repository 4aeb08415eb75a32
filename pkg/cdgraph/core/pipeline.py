"""
Classify every graph of one order.

Graphs are enumerated and filtered; survivors collect occurrence
certificates (joins, Gamma(k, 1), recipe renderings) and elimination
verdicts (diameter-3 tests, eliminators). A graph holding both is a
contradiction in the inputs and stops the run. What remains Unknown is
swept once with the admissibility test against a frozen copy of the run's
verdicts.
"""
import logging
from collections import Counter, namedtuple

from .admissibility import (ADM_ALL, OccurrenceOracle, admissibility_report,
                            all_admissible_eliminator)
from .conditions import (PALFY_INEQ, disconnected_shape, filter_reason,
                         palfy_inequality, signature)
from .conf import settings
from .constructions import RECIPE, build_recipes, join_closure
from .diameter3 import violations
from .eliminators import index_catalog, run_eliminators
from .enumeration import enumerate_graphs
from .graph import (INFINITE, CanonicalKey, Graph6Error, canonical_key,
                    decode_graph6, diameter, encode_graph6)
from .knowledge import KnowledgeBase, kb_validate
from .records import NOT_OCCURS, OCCURS, UNKNOWN, ClassificationRecord

logger = logging.getLogger(__name__)


class SoundnessAlarm(RuntimeError):
    pass


class StageError(RuntimeError):

    def __init__(self, stage, error, report=None):
        super().__init__("Stage {} failed: {}".format(stage, error))
        self.stage = stage
        self.error = error
        self.report = report


class Verdict(namedtuple('Verdict', 'status reason provenance')):
    __slots__ = ()

    def __str__(self):
        return "{} {} {}".format(self.status, self.reason,
                                 self.provenance).strip()


class GraphRecord(namedtuple('GraphRecord', [
        'key', 'graph6', 'order', 'connected', 'signature', 'diameter',
        'status', 'reason', 'provenance', 'verdicts'])):
    """One enumerated graph and its outcome. ``verdicts`` holds every
    certificate and elimination found, the deciding one first."""
    __slots__ = ()

    @property
    def passed_filter(self):
        return self.reason not in ('P1', 'P2')

    def graph(self):
        return decode_graph6(self.graph6)

    def to_record(self):
        return ClassificationRecord(self.key, self.graph6, self.order,
                                    self.status, self.reason or '-',
                                    self.provenance)


class ClassificationReport:

    def __init__(self, order, strict=False):
        self.order = order
        self.strict = strict
        self.records = []
        self.admissibility = {}
        self._index = {}

    def add(self, record):
        self._index[record.key] = len(self.records)
        self.records.append(record)

    def replace(self, record):
        self.records[self._index[record.key]] = record

    def get(self, key):
        position = self._index.get(key)
        return None if position is None else self.records[position]

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def survivors(self, connected=True):
        return [record for record in self.records
                if record.passed_filter and record.connected == connected]

    def tallies(self, connected=True):
        return Counter(record.status for record in self.survivors(connected))

    def run_state(self):
        return {record.key: record.to_record() for record in self.records}

    def to_kb(self):
        return KnowledgeBase(record.to_record() for record in self.records)

    def find(self, text):
        """Look a graph up by graph6 or by canonical key hex."""
        try:
            key = canonical_key(decode_graph6(text))
        except (Graph6Error, ValueError):
            try:
                key = CanonicalKey.fromhex(text)
            except ValueError:
                return None
        return self.get(key)

    def explain(self, text):
        record = self.find(text)
        if record is None:
            return ["{} is not a graph of order {}".format(text, self.order)]
        lines = ["{} {} {} {}".format(record.graph6, record.status,
                                      record.reason or '-', record.provenance),
                 "  key {}".format(record.key.hex()),
                 "  connected {} signature {} diameter {}".format(
                     record.connected, record.signature, record.diameter)]
        for verdict in record.verdicts:
            lines.append("  verdict: {}".format(verdict))
        for vertex_report in self.admissibility.get(record.key, ()):
            lines.append("  vertex {}: {}".format(vertex_report.vertex,
                                                  vertex_report.status))
            for evidence in vertex_report.evidence:
                lines.append("    " + evidence.describe())
        return lines


def _diameter3_verdicts(g, strict):
    found = []
    for result in violations(g, strict):
        part = result.partition
        found.append(Verdict(NOT_OCCURS, result.reason,
                             "p={} q={} rho sizes {}/{}/{}/{}".format(
                                 part.p, part.q, len(part.rho1),
                                 len(part.rho2), len(part.rho3),
                                 len(part.rho4))))
    return found


def classify_graph(g, certificates, catalog, strict=False):
    """The GraphRecord for ``g`` before the admissibility sweep.
    ``certificates`` maps canonical keys to Occurs records."""
    key = canonical_key(g)
    graph6 = encode_graph6(g)
    found = certificates.get(key, ())
    occurs = [Verdict(OCCURS, record.reason, record.provenance)
              for record in found]
    reason = filter_reason(g)
    connected = g.is_connected()
    if reason:
        if occurs:
            raise SoundnessAlarm(
                "{} fails {} but is certified by {}".format(
                    graph6, reason, occurs[0]))
        return GraphRecord(key, graph6, g.n, connected, None, None,
                           NOT_OCCURS, reason, "fails {}".format(reason), ())

    eliminated = []
    sig = dia = None
    if not connected:
        shape = disconnected_shape(g)
        if shape is not None and not palfy_inequality(shape):
            eliminated.append(Verdict(
                NOT_OCCURS, PALFY_INEQ,
                "components K_{} and K_{}: {} < 2^{} - 1".format(
                    shape.n_large, shape.n_small, shape.n_large,
                    shape.n_small)))
    else:
        sig = signature(g)
        dia = diameter(g)
        if dia == 3:
            eliminated.extend(_diameter3_verdicts(g, strict))
        for _, verdict in run_eliminators(g, catalog):
            if verdict.eliminated:
                eliminated.append(Verdict(NOT_OCCURS, verdict.reason,
                                          verdict.provenance))

    if occurs and eliminated:
        raise SoundnessAlarm(
            "{} is certified by {} and eliminated by {}".format(
                graph6, occurs[0], eliminated[0]))
    verdicts = tuple(occurs or eliminated)
    for secondary in verdicts[1:]:
        logger.debug("%s secondary verdict: %s", graph6, secondary)
    if verdicts:
        first = verdicts[0]
        status, reason, provenance = first
    else:
        status, reason, provenance = UNKNOWN, None, ''
    return GraphRecord(key, graph6, g.n, connected, sig,
                       None if dia == INFINITE else dia,
                       status, reason, provenance, verdicts)


def filter_stage(n):
    """(graph, failed filter or None, signature) for every graph of order n."""
    for g in enumerate_graphs(n):
        reason = filter_reason(g)
        yield g, reason, None if reason else signature(g)


def _certificates(kb, n, constructions):
    below = [c.record() for c in constructions if c.order < n]
    closure = join_closure(kb, n, extra=below)
    certificates = {}
    for record in closure.values():
        certificates.setdefault(record.key, []).append(record)
    for construction in constructions:
        if construction.order == n:
            certificates.setdefault(construction.key, []).append(
                construction.record())
    return certificates


def _check_seed(kb):
    problems = kb_validate(kb)
    if problems:
        record, reason = problems[0]
        raise SoundnessAlarm(
            "Seed records {} as occurring but it fails {} ({} such "
            "records)".format(record.graph6, reason, len(problems)))


def _admissibility_sweep(report, kb):
    oracle = OccurrenceOracle(kb, report.run_state(), report.order)
    eliminated = []
    for record in report.survivors(connected=True):
        if record.status != UNKNOWN:
            continue
        g = record.graph()
        if all_admissible_eliminator(g, oracle).eliminated:
            eliminated.append(record)
            report.admissibility[record.key] = admissibility_report(g, oracle)
    for record in eliminated:
        verdict = Verdict(NOT_OCCURS, ADM_ALL, "every vertex admissible")
        report.replace(record._replace(
            status=NOT_OCCURS, reason=ADM_ALL,
            provenance=verdict.provenance, verdicts=(verdict,)))
    logger.info("Admissibility sweep: %d graphs eliminated, %d oracle "
                "queries", len(eliminated), oracle.queries)


def _check_kb_agreement(report, kb):
    for known in kb.records(order=report.order):
        record = report.get(known.key)
        if record is None or UNKNOWN in (known.status, record.status):
            continue
        if known.status != record.status:
            raise SoundnessAlarm(
                "{} is {} in this run ({}) but {} in the knowledge base "
                "({})".format(record.graph6, record.status, record.reason,
                              known.status, known.provenance))


def classify_order(n, kb, recipes=(), catalog=(), strict=None, rounds=None,
                   check_primality=None, constructions=None):
    """
    Classify every graph of order ``n``. ``recipes`` are parsed Recipe
    objects, built here unless ``constructions`` already holds them.
    """
    if strict is None:
        strict = settings.CDG_DIAMETER3_STRICT
    if rounds is None:
        rounds = settings.CDG_MILLER_RABIN_ROUNDS
    if check_primality is None:
        check_primality = settings.CDG_VERIFY_PRIMES
    report = ClassificationReport(n, strict)
    stage = 'seed'
    try:
        _check_seed(kb)
        stage = 'constructions'
        if constructions is None:
            constructions = build_recipes(recipes, rounds, check_primality)
        catalog = index_catalog(catalog)
        stage = 'closure'
        certificates = _certificates(kb, n, constructions)
        logger.info("Order %d: %d certified graphs, %d catalog entries", n,
                    len(certificates), len(catalog))
        stage = 'classify'
        for g in enumerate_graphs(n):
            report.add(classify_graph(g, certificates, catalog, strict))
        logger.info("Order %d: %d graphs, %d survive the filter", n,
                    len(report), len(report.survivors(True))
                    + len(report.survivors(False)))
        stage = 'admissibility'
        _admissibility_sweep(report, kb)
        stage = 'agreement'
        _check_kb_agreement(report, kb)
    except SoundnessAlarm:
        raise
    except Exception as e:
        raise StageError(stage, e, report) from e
    logger.info("Order %d connected tallies: %s", n,
                dict(report.tallies(connected=True)))
    return report
