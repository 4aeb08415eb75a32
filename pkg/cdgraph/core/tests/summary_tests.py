import os

import pandas as pd
import pytest

from core.graph import decode_graph6
from core.knowledge import kb_load
from core.records import NOT_OCCURS, OCCURS, UNKNOWN
from core.summaries import (ClassificationOverview, regular_survivors,
                            render_survivors, render_tallies, write_report)
from .test_helpers import order8_report


@pytest.fixture(scope='module')
def overview():
    return ClassificationOverview(order8_report())


def test_counts(overview):
    assert overview.counts() == {'total': 12346, 'connected': 11117,
                                 'disconnected': 1229, 'survivors': 299}
    assert overview.tallies()[NOT_OCCURS] == 56
    assert overview.tallies(connected=False) == {OCCURS: 2, NOT_OCCURS: 2,
                                                 UNKNOWN: 0}


def test_by_signature(overview):
    table = overview.by_signature()
    assert table.index.tolist() == ['(7,1)', '(6,2)', '(5,3)', '(4,4)']
    assert table.total.tolist() == [7, 45, 151, 96]
    assert table.loc['(7,1)', OCCURS] == 7


def test_diameter_split(overview):
    split = overview.diameter_split()
    assert split.loc[('(6,2)', 3), OCCURS] == 3
    assert split.loc[('(6,2)', 3), NOT_OCCURS] == 4
    assert split.loc[('(5,3)', 3), NOT_OCCURS] == 23
    assert split.loc[('(4,4)', 3), NOT_OCCURS] == 21


def test_reasons(overview):
    reasons = overview.reason_counts()
    assert reasons['ADM-ALL'] == 1
    assert reasons['RECIPE'] == 3
    assert overview.reason_counts(connected=False)['PALFY-INEQ'] == 2


def test_regular_survivors(overview):
    regular = regular_survivors(overview.report)
    degrees = {row['graph6']: decode_graph6(row['graph6']).degrees()[0]
               for row in regular}
    assert sorted(degrees.values()) == [4, 5, 5, 6, 7]
    for row in regular:
        if degrees[row['graph6']] in (6, 7):
            assert row['status'] == OCCURS
        else:
            assert (row['status'], row['reason']) == (NOT_OCCURS, 'REG')


def test_disconnected_census(overview):
    census = overview.disconnected_census()
    assert census.n_small.tolist() == [1, 2, 3, 4]
    assert census.n_large.tolist() == [7, 6, 5, 4]
    assert census.status.tolist() == [OCCURS, OCCURS, NOT_OCCURS,
                                      NOT_OCCURS]


def test_render(overview):
    text = render_survivors(overview)
    assert '# signature (6,2): 45 graphs' in text
    marked = [line for line in text.splitlines()
              if line and not line.startswith('#')
              and line.split()[0].endswith('*')]
    assert len(marked) == overview.tallies()[UNKNOWN]
    tallies = render_tallies(overview)
    assert tallies.startswith(
        'order 8: 12346 graphs, 11117 connected, 1229 disconnected')


def test_to_dict(overview):
    summary = overview.to_dict()
    assert summary['order'] == 8
    assert summary['counts']['survivors'] == 299
    assert len(summary['regular_survivors']) == 5


def test_write_report(overview, tmp_path):
    out = str(tmp_path)
    written = write_report(overview.report, out, ['txt', 'csv', 'dot'])
    assert all(os.path.exists(path) for path in written)
    survivors = pd.read_csv(os.path.join(out, 'survivors.csv'))
    assert len(survivors) == 299
    assert len(pd.read_csv(os.path.join(out, 'disconnected.csv'))) == 4
    assert len(os.listdir(os.path.join(out, 'dot'))) == 299
    assert os.path.exists(os.path.join(out, 'dot', 's7_1_001.dot'))
    assert len(kb_load(os.path.join(out, 'order8.txt'))) == 12346
