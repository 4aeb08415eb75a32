"""
Classification records and the line format they are stored in.

One record per line, space separated::

    <graph6> <OCCURS|NOT|UNKNOWN> <reason-code> <provenance...>

Blank lines and lines starting with ``#`` are ignored.
"""
from collections import namedtuple

from .graph import Graph6Error, canonical_key, decode_graph6, encode_graph6

OCCURS = 'OCCURS'
NOT_OCCURS = 'NOT'
UNKNOWN = 'UNKNOWN'
STATUSES = (OCCURS, NOT_OCCURS, UNKNOWN)

# Reason codes a NotOccurs verdict may carry.
NOT_OCCURS_REASONS = ('P1', 'P2', 'PALFY-INEQ', 'D3-RHO3', 'D3-GROWTH',
                      'CUT2', 'REG', 'DEG2', 'GAMMA', 'CATALOG', 'ADM-ALL')


class KBParseError(ValueError):

    def __init__(self, message, lineno=None, path=None):
        where = []
        if path:
            where.append(str(path))
        if lineno is not None:
            where.append("line {}".format(lineno))
        if where:
            message = "{}: {}".format(":".join(where), message)
        super().__init__(message)
        self.lineno = lineno
        self.path = path


class ClassificationRecord(namedtuple(
        'ClassificationRecord',
        'key graph6 order status reason provenance')):
    __slots__ = ()

    @classmethod
    def from_graph(cls, g, status, reason, provenance=''):
        if status not in STATUSES:
            raise ValueError("Unknown status {!r}".format(status))
        return cls(canonical_key(g), encode_graph6(g), g.n, status, reason,
                   provenance)

    def graph(self):
        return decode_graph6(self.graph6)

    def to_line(self):
        line = "{} {} {}".format(self.graph6, self.status, self.reason)
        if self.provenance:
            line += " " + self.provenance
        return line


def parse_line(line, lineno=None, path=None):
    """Parse one record line; returns None for blanks and comments."""
    text = line.strip()
    if not text or text.startswith('#'):
        return None
    fields = text.split(None, 3)
    if len(fields) < 3:
        raise KBParseError(
            "Expected '<graph6> <status> <reason> [provenance]'", lineno, path)
    graph6, status, reason = fields[:3]
    provenance = fields[3] if len(fields) == 4 else ''
    if status not in STATUSES:
        raise KBParseError(
            "Status must be one of {}, not {!r}".format(
                "|".join(STATUSES), status), lineno, path)
    try:
        g = decode_graph6(graph6)
    except (Graph6Error, ValueError) as e:
        raise KBParseError("Bad graph6 {!r}: {}".format(graph6, e),
                           lineno, path)
    # Keep the graph6 exactly as written so a file round-trips unchanged.
    return ClassificationRecord(canonical_key(g), graph6, g.n, status, reason,
                                provenance)


def parse_lines(lines, path=None):
    for lineno, line in enumerate(lines, start=1):
        record = parse_line(line, lineno, path)
        if record is not None:
            yield record


def read_records(path):
    with open(path, encoding='utf-8') as f:
        return list(parse_lines(f, path=path))
