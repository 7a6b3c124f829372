import json

import pytest

from oddlength import verifier
from oddlength.enumeration import ResourceLimits
from oddlength.poly import ONE, X
from oddlength.verifier import (
    CheckParams, IdentityId, SuiteConfig, UnknownIdentityError, check_identity, run_suite,
)

SMALL = CheckParams(max_n_a=5, max_n_b=4)


@pytest.mark.parametrize("ident", list(IdentityId), ids=lambda i: i.value)
def test_identity_passes_small(ident):
    report = check_identity(ident, SMALL)
    assert report.status == "pass", report.to_json()
    assert report.instances > 0


def test_catalog_is_complete():
    assert set(verifier.CATALOG) == set(IdentityId)
    assert len(IdentityId) == 23


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        check_identity("thm9_9", SMALL)


def test_counterexample_and_replay(monkeypatch):
    real = verifier.closed_conjA

    def broken(n, I):
        out = real(n, I)
        return out + X**7 if n == 4 and sorted(I.members) == [2] else out

    monkeypatch.setattr(verifier, "closed_conjA", broken)
    report = check_identity(IdentityId.thm4_2_conjA, SMALL)
    assert report.status == "fail"
    cx = report.counterexample
    assert cx["params"] == {"n": 4, "set": [2]}
    assert cx["lhs"] != cx["rhs"]
    json.dumps(report.to_json())

    replay = check_identity(IdentityId.thm4_2_conjA, CheckParams(where=cx["params"]))
    assert replay.status == "fail"
    assert replay.instances == 1
    assert replay.counterexample == cx

    monkeypatch.setattr(verifier, "closed_conjA", real)
    fixed = check_identity(IdentityId.thm4_2_conjA, CheckParams(where=cx["params"]))
    assert fixed.status == "pass" and fixed.instances == 1


def test_replay_of_element_level_instance():
    where = {"n": 4, "window": [4, 2, 1, 3]}
    report = check_identity(IdentityId.defA_equivalence, CheckParams(where=where))
    assert report.passed and report.instances == 1


def test_empty_range_is_an_error_not_a_pass():
    report = check_identity(IdentityId.prop3_5_scrr, CheckParams(where={"n": 1}))
    assert report.status == "error"
    assert report.instances == 0
    assert report.message


def test_single_rank_config():
    report = check_identity(IdentityId.cor4_4_full, CheckParams(max_n_a=1, main_n_a=1, max_n_b=1))
    assert report.passed and report.instances == 1


def test_suite_order_and_threads():
    ids = (IdentityId.eq_chessA0, IdentityId.thm4_1_plus, IdentityId.prop2_7_ascending)
    serial = run_suite(SuiteConfig(ids, SMALL, threads=1))
    threaded = run_suite(SuiteConfig(ids, SMALL, threads=3))
    assert [r.identity for r in serial] == list(ids)
    assert [r.identity for r in threaded] == list(ids)
    assert [r.instances for r in serial] == [r.instances for r in threaded]


def test_resource_limits_refused():
    params = CheckParams(max_n_a=9, limits=ResourceLimits(max_n_a=6, max_n_b=8))
    reports = run_suite(SuiteConfig((IdentityId.thm4_1_plus,), params))
    assert reports[0].status == "error"
    assert "limit" in reports[0].message


def test_default_suite_passes():
    reports = run_suite()
    bad = [r.to_json() for r in reports if not r.passed]
    assert not bad
    assert len(reports) == 23
