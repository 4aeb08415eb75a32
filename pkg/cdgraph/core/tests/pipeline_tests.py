from collections import Counter

import pytest

from core.admissibility import (ADM_ALL, OccurrenceOracle,
                                all_admissible_eliminator)
from core.conditions import PALFY_INEQ
from core.constructions import GAMMA_T1, JOIN, RECIPE
from core.diameter3 import RHO3, labelings, violations
from core.eliminators import (CATALOG, CUT2, DEG2, GAMMA, REG,
                              gamma_family_generate)
from core.graph import canonical_key, encode_graph6
from core.knowledge import KnowledgeBase, kb_seed_builtin
from core.pipeline import (SoundnessAlarm, StageError, _check_kb_agreement,
                           classify_graph, classify_order, filter_stage)
from core.records import NOT_OCCURS, NOT_OCCURS_REASONS, OCCURS, UNKNOWN
from .test_helpers import (CLOSURE_PRODUCTS, SPLIT44, SPLIT44_MINUS_0,
                           SPLIT44_MINUS_1, SPLIT44_MINUS_2, K, KK, cycle,
                           gamma_joined, k6_with_tail, lewis6_join_e2,
                           order8_report, record, shipped_kb, split44)

SIGNATURES = [(7, 1), (6, 2), (5, 3), (4, 4)]


@pytest.fixture(scope='module')
def report():
    return order8_report()


def status_of(report, g):
    return report.get(canonical_key(g)).status


def verdict_hits(report, reason):
    return [r for r in report.survivors()
            if any(v.reason == reason for v in r.verdicts)]


def test_counts(report):
    assert len(report) == 12346
    assert sum(1 for r in report if r.connected) == 11117
    assert sum(1 for r in report if not r.connected) == 1229
    assert len(report.survivors()) == 299
    sizes = Counter(tuple(r.signature) for r in report.survivors())
    assert [sizes[s] for s in SIGNATURES] == [7, 45, 151, 96]


def test_disconnected(report):
    disconnected = [r for r in report if not r.connected]
    statuses = Counter(r.status for r in disconnected)
    assert statuses == {OCCURS: 2, NOT_OCCURS: 1227}
    survivors = report.survivors(connected=False)
    assert len(survivors) == 4
    assert status_of(report, KK(7, 1)) == OCCURS
    assert status_of(report, KK(6, 2)) == OCCURS
    assert report.get(canonical_key(KK(6, 2))).reason == RECIPE
    for a, b in ((5, 3), (4, 4)):
        found = report.get(canonical_key(KK(a, b)))
        assert (found.status, found.reason) == (NOT_OCCURS, PALFY_INEQ)


def test_diameter3(report):
    by_signature = {}
    for r in report.survivors():
        if r.diameter == 3:
            by_signature.setdefault(tuple(r.signature), []).append(r)
    assert sorted(by_signature) == [(4, 4), (5, 3), (6, 2)]
    counts = {s: (len(rs), sum(1 for r in rs if r.status == NOT_OCCURS),
                  sum(1 for r in rs if r.status == OCCURS))
              for s, rs in by_signature.items()}
    assert counts == {(6, 2): (7, 4, 3), (5, 3): (23, 23, 0),
                      (4, 4): (21, 21, 0)}


def test_diameter3_modes_agree(report):
    for r in report.survivors():
        if r.diameter != 3:
            continue
        g = r.graph()
        found = violations(g)
        assert bool(found) == bool(violations(g, strict=True))
        if any(len(part.near) >= 3 for part in labelings(g)):
            assert found
        elif found:
            assert {result.reason for result in found} == {RHO3}
    tail = k6_with_tail()
    assert max(len(part.near) for part in labelings(tail)) == 2
    assert {result.reason for result in violations(tail)} == {RHO3}


def test_eliminator_hits(report):
    cut = verdict_hits(report, CUT2)
    assert len(cut) == 3
    assert all(r.status == NOT_OCCURS and r.diameter == 3 for r in cut)
    assert canonical_key(k6_with_tail()) in {r.key for r in cut}
    regular = verdict_hits(report, REG)
    assert sorted(r.graph().degrees()[0] for r in regular) == [4, 5, 5]
    assert canonical_key(gamma_family_generate(4, 4)) in \
        {r.key for r in regular}
    assert canonical_key(gamma_family_generate(6, 2)) in \
        {r.key for r in verdict_hits(report, DEG2)}
    gammas = {r.key for r in verdict_hits(report, GAMMA)}
    assert gammas == {canonical_key(gamma_family_generate(k, 8 - k))
                      for k in (6, 5, 4)}
    assert len(verdict_hits(report, CATALOG)) == 2


def test_not_occurs(report):
    tallies = report.tallies()
    assert tallies[NOT_OCCURS] == 56
    adm = [r for r in report.survivors() if r.reason == ADM_ALL]
    assert [r.key for r in adm] == [canonical_key(split44())]
    for r in report:
        if r.status == NOT_OCCURS:
            assert r.reason in NOT_OCCURS_REASONS


def test_occurs(report):
    for i in range(1, 8):
        assert status_of(report, gamma_joined(i)) == OCCURS
    for name, build in CLOSURE_PRODUCTS.items():
        assert status_of(report, build()) == OCCURS, name
    found = report.get(canonical_key(lewis6_join_e2()))
    assert (found.status, found.reason) == (OCCURS, JOIN)
    assert report.get(canonical_key(gamma_family_generate(7, 1))).status \
        == OCCURS
    recipes = [r for r in report.survivors() if r.reason == RECIPE]
    assert len(recipes) == 3
    assert all(r.diameter == 3 for r in recipes)
    occurs = report.tallies()[OCCURS]
    assert occurs + report.tallies()[UNKNOWN] == 299 - 56
    assert {v.reason for r in report.survivors() for v in r.verdicts
            if v.status == OCCURS} <= {JOIN, GAMMA_T1, RECIPE}


def test_split44_needs_every_seed(report):
    kb = shipped_kb()
    run_state = report.run_state()
    oracle = OccurrenceOracle(kb, run_state, 8)
    assert all_admissible_eliminator(split44(), oracle).eliminated
    for seed in (SPLIT44_MINUS_0, SPLIT44_MINUS_1, SPLIT44_MINUS_2):
        reduced = KnowledgeBase(r for r in kb if r.graph6 != seed)
        oracle = OccurrenceOracle(reduced, run_state, 8)
        assert not all_admissible_eliminator(split44(), oracle).eliminated


def test_explain(report):
    lines = report.explain(SPLIT44)
    assert ' NOT ADM-ALL ' in lines[0]
    assert any(line.strip().startswith('vertex 7: YES') for line in lines)
    assert report.explain(report.get(canonical_key(K(8))).key.hex())[0] \
        .startswith(encode_graph6(K(8)))
    assert report.explain('nonsense')[0].endswith('not a graph of order 8')


def test_kb_agreement(report):
    _check_kb_agreement(report, KnowledgeBase([record(KK(7, 1), OCCURS)]))
    with pytest.raises(SoundnessAlarm):
        _check_kb_agreement(report,
                            KnowledgeBase([record(KK(5, 3), OCCURS)]))


def test_filter_stage():
    rows = list(filter_stage(5))
    assert len(rows) == 34
    passed = [sig for _, reason, sig in rows if reason is None]
    assert all(sig is not None for sig in passed)


def test_small_order():
    report = classify_order(5, kb_seed_builtin())
    assert len(report) == 34
    assert sum(1 for r in report if r.connected) == 21
    assert status_of(report, K(5)) == OCCURS
    assert status_of(report, cycle(5)) == NOT_OCCURS
    assert report.get(canonical_key(cycle(5))).reason in ('P1', 'P2')


def test_rerun_on_own_output():
    kb = shipped_kb()
    first = classify_order(6, kb, check_primality=False)
    second = classify_order(6, kb.overlay(first.to_kb()),
                            check_primality=False)
    assert [(r.key, r.status) for r in first] == \
        [(r.key, r.status) for r in second]


def test_seed_failing_filter_alarms():
    kb = KnowledgeBase([record(cycle(5), OCCURS)])
    with pytest.raises(SoundnessAlarm):
        classify_order(5, kb)


def test_certified_and_eliminated_alarms():
    g = cycle(5)
    with pytest.raises(SoundnessAlarm):
        classify_graph(g, {canonical_key(g): [record(g, OCCURS)]}, {})
    g = gamma_family_generate(6, 2)
    with pytest.raises(SoundnessAlarm):
        classify_graph(g, {canonical_key(g): [record(g, OCCURS)]}, {})


def test_secondary_verdicts_kept():
    g = gamma_family_generate(6, 2)
    result = classify_graph(g, {}, {})
    assert result.status == NOT_OCCURS
    assert {v.reason for v in result.verdicts} == {DEG2, GAMMA}
    assert result.reason == result.verdicts[0].reason


def test_stage_error():
    with pytest.raises(StageError) as info:
        classify_order(5, kb_seed_builtin(), catalog=['not a record'])
    assert info.value.stage == 'constructions'
    assert info.value.report.order == 5
