import os

import pandas as pd

from .conditions import disconnected_shape
from .graph import decode_graph6, to_dot
from .knowledge import kb_store
from .records import UNKNOWN, STATUSES

COLUMNS = ['graph6', 'key', 'connected', 'signature', 'a', 'b', 'diameter',
           'status', 'reason', 'provenance', 'passed_filter', 'regular']


def _row(record):
    sig = record.signature
    degrees = set(record.graph().degrees()) if record.passed_filter else set()
    return {
        'graph6': record.graph6,
        'key': record.key.hex(),
        'connected': record.connected,
        'signature': str(sig) if sig else '',
        'a': sig.a if sig else None,
        'b': sig.b if sig else None,
        'diameter': record.diameter,
        'status': record.status,
        'reason': record.reason or '',
        'provenance': record.provenance,
        'passed_filter': record.passed_filter,
        'regular': len(degrees) == 1,
    }


class ClassificationOverview:
    """Tables over a ClassificationReport."""

    def __init__(self, report):
        self.report = report
        self.df = pd.DataFrame([_row(record) for record in report],
                               columns=COLUMNS)
        for column in ('a', 'b', 'diameter'):
            self.df[column] = self.df[column].astype('Int64')

    @property
    def survivors(self):
        df = self.df
        return df[df.passed_filter & df.connected].sort_values(
            ['a', 'graph6'], ascending=[False, True])

    @property
    def disconnected(self):
        df = self.df
        return df[df.passed_filter & ~df.connected]

    def counts(self):
        df = self.df
        return {
            'total': len(df),
            'connected': int(df.connected.sum()),
            'disconnected': int((~df.connected).sum()),
            'survivors': len(self.survivors),
        }

    def tallies(self, connected=True):
        frame = self.survivors if connected else self.disconnected
        counts = frame.status.value_counts()
        return {status: int(counts.get(status, 0)) for status in STATUSES}

    def by_signature(self):
        """Survivor counts per signature and status, largest clique first."""
        table = pd.crosstab(self.survivors.signature, self.survivors.status)
        table = table.reindex(columns=list(STATUSES), fill_value=0)
        table['total'] = table.sum(axis=1)
        order = self.survivors.drop_duplicates('signature').signature
        return table.reindex(order.tolist())

    def diameter_split(self):
        table = pd.crosstab([self.survivors.signature,
                             self.survivors.diameter],
                            self.survivors.status)
        return table.reindex(columns=list(STATUSES), fill_value=0)

    def reason_counts(self, connected=True):
        frame = self.survivors if connected else self.disconnected
        counts = frame[frame.reason != ''].reason.value_counts()
        return {reason: int(n) for reason, n in sorted(counts.items())}

    def regular_survivors(self):
        frame = self.survivors[self.survivors.regular]
        return frame[['graph6', 'signature', 'diameter', 'status',
                      'reason']].to_dict('records')

    def disconnected_census(self):
        rows = []
        for record in self.report.survivors(connected=False):
            shape = disconnected_shape(record.graph())
            rows.append({
                'n_small': shape.n_small if shape else None,
                'n_large': shape.n_large if shape else None,
                'graph6': record.graph6,
                'status': record.status,
                'reason': record.reason or '',
                'provenance': record.provenance,
            })
        census = pd.DataFrame(rows, columns=['n_small', 'n_large', 'graph6',
                                             'status', 'reason',
                                             'provenance'])
        return census.sort_values(['n_small', 'graph6']).reset_index(
            drop=True)

    def to_dict(self):
        return {
            'order': self.report.order,
            'strict': self.report.strict,
            'counts': self.counts(),
            'tallies': self.tallies(),
            'disconnected_tallies': self.tallies(connected=False),
            'by_signature': self.by_signature().to_dict('index'),
            'reasons': self.reason_counts(),
            'regular_survivors': self.regular_survivors(),
        }


def regular_survivors(report):
    return ClassificationOverview(report).regular_survivors()


def render_survivors(overview):
    """Survivors grouped by signature in graph6 order; Unknowns marked *."""
    lines = []
    for signature, group in overview.survivors.groupby('signature',
                                                       sort=False):
        lines.append("# signature {}: {} graphs".format(signature,
                                                         len(group)))
        for row in group.itertuples():
            marker = '*' if row.status == UNKNOWN else ''
            lines.append("{}{} {} {} {}".format(
                row.graph6, marker, row.status, row.reason or '-',
                row.provenance).rstrip())
        lines.append('')
    return '\n'.join(lines)


def render_tallies(overview):
    counts = overview.counts()
    lines = ["order {}: {} graphs, {} connected, {} disconnected".format(
        overview.report.order, counts['total'], counts['connected'],
        counts['disconnected']),
        "connected survivors: {}".format(counts['survivors'])]
    for title, tally in (('connected', overview.tallies()),
                         ('disconnected', overview.tallies(False))):
        lines.append("{}: {}".format(title, " ".join(
            "{}={}".format(status, n) for status, n in tally.items())))
    lines.append('')
    lines.append(overview.by_signature().to_string())
    lines.append('')
    lines.append(overview.diameter_split().to_string())
    lines.append('')
    for reason, n in overview.reason_counts().items():
        lines.append("{:<12}{}".format(reason, n))
    return '\n'.join(lines) + '\n'


def write_report(report, out_dir, formats=('txt', 'csv')):
    """Write the report files into ``out_dir`` and return their paths."""
    os.makedirs(out_dir, exist_ok=True)
    overview = ClassificationOverview(report)
    written = []

    def path(name):
        written.append(os.path.join(out_dir, name))
        return written[-1]

    if 'txt' in formats:
        with open(path('survivors.txt'), 'w', encoding='utf-8') as f:
            f.write(render_survivors(overview))
        with open(path('tallies.txt'), 'w', encoding='utf-8') as f:
            f.write(render_tallies(overview))
    if 'csv' in formats:
        columns = ['graph6', 'key', 'signature', 'diameter', 'status',
                   'reason', 'provenance']
        overview.survivors[columns].to_csv(path('survivors.csv'),
                                           index=False)
        overview.disconnected_census().to_csv(path('disconnected.csv'),
                                              index=False)
    if 'dot' in formats:
        dot_dir = os.path.join(out_dir, 'dot')
        os.makedirs(dot_dir, exist_ok=True)
        for signature, group in overview.survivors.groupby('signature',
                                                           sort=False):
            stem = signature.strip('()').replace(',', '_')
            for i, row in enumerate(group.itertuples(), start=1):
                name = "s{}_{:03d}".format(stem, i)
                with open(path(os.path.join('dot', name + '.dot')), 'w',
                          encoding='utf-8') as f:
                    f.write(to_dot(decode_graph6(row.graph6), name=name))
    kb_store(report.to_kb(), path('order{}.txt'.format(report.order)),
             header="order {} classification".format(report.order))
    return written
