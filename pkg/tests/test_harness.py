import json

import pytest

import oracles
from semiprimary.harness import (EXAMPLE_IDS, Universe, search_separating, traceability_matrix,
                                 verify_all)
from semiprimary.harness.theorems import (THEOREM_IDS, SuiteContext, TheoremReport, reports_to_json,
                                          run_suite)
from semiprimary.harness.universe import ENV_MAX_ORDER


@pytest.fixture(scope="module")
def small_reports():
    u = Universe.small()
    return u, run_suite(u)


def test_small_suite_passes_non_vacuously(small_reports):
    _, reports = small_reports
    assert [r.theorem_id for r in reports] == list(THEOREM_IDS)
    for r in reports:
        assert r.passed and r.violations == []
        assert r.instances_checked > 0 or r.flagged, r.theorem_id


def test_suite_json_is_deterministic(small_reports):
    u, reports = small_reports
    again = run_suite(Universe.small())
    assert reports_to_json(reports, u) == reports_to_json(again, u)
    body = json.loads(reports_to_json(reports, u))
    assert body["all_passed"] and body["universe"] == "small"


def test_instance_accounting():
    u = Universe(["Z(12)"], 64)
    ctx = SuiteContext(u)
    (entry,) = u.entries
    proper = len(entry.ring.ideals.proper)
    (rep,) = run_suite(u, ["r3"], ctx)
    assert rep.instances_checked + rep.hypothesis_skipped == proper * len(entry.deltas)


def test_report_records_violations():
    rep = TheoremReport("r1", "check_r1")
    rep.check(True)
    rep.check(False, ring="Z(4)")
    rep.skip(3)
    assert (rep.instances_checked, rep.hypothesis_skipped) == (2, 3)
    assert rep.status == "FAIL" and rep.violations == [{"ring": "Z(4)"}]
    assert not rep.passed


def test_vacuous_status():
    assert TheoremReport("r1", "c").status == "VACUOUS"
    assert TheoremReport("r13", "c").status == "VACUOUS (flagged)"


def test_unknown_theorem_rejected():
    with pytest.raises(ValueError):
        run_suite(Universe.small(), ["r99"])


def test_traceability_matrix(small_reports):
    _, reports = small_reports
    lines = traceability_matrix(reports).splitlines()
    assert lines[0].startswith("| theorem |") and len(lines) == 2 + len(reports)
    assert all(line.endswith("PASS |") for line in lines[2:])


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv(ENV_MAX_ORDER, "8")
    u = Universe.small()
    assert u.max_order == 8
    assert all(e.ring.order <= 8 for e in u.entries)
    assert set(u.over_cap) == {"Z(12)", "Z(36)", "prod(Z(3),Z(4))", "trunc(Z(4),3)"}


def _oracle_search(universe, in_a, in_b):
    for entry in universe.by_order():
        R = entry.ring
        for idx, I in enumerate(R.ideals):
            m = frozenset(I.codes)
            if len(m) < R.order and in_a(R, m) and not in_b(R, m):
                return R.spec, idx
    return None


@pytest.mark.parametrize("a,b,oa,ob", [
    ("weakly-semiprimary", "semiprimary", oracles.weakly_semiprimary, oracles.semiprimary),
    ("weakly-prime", "prime", oracles.weakly_prime, oracles.prime),
    ("semiprimary", "prime", oracles.semiprimary, oracles.prime),
    ("prime", "semiprimary", oracles.prime, oracles.semiprimary),
])
def test_search_matches_oracle(a, b, oa, ob):
    u = Universe.small()
    w = search_separating(a, b, u)
    expected = _oracle_search(u, oa, ob)
    assert (None if w is None else (w.ring.spec, w.ideal_index)) == expected


def test_search_known_separations():
    u = Universe.small()
    w = search_separating("weakly-semiprimary", "semiprimary", u)
    assert w.ring.spec == "prod(Z(2),Z(2))" and w.ideal.is_zero
    assert search_separating("prime", "prime", u) is None
    with pytest.raises(ValueError):
        search_separating("nonsense", "prime", u)


def test_examples_all_pass():
    reports = verify_all()
    assert [r.example for r in reports] == list(EXAMPLE_IDS)
    for r in reports:
        assert r.passed, [d for d, ok in r.facts if not ok]
