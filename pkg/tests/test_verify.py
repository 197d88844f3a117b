import pytest

from implattice.verify import CLAIMS, SUITES, run_claims, run_suite, summarize


def test_registry_ids_unique_and_suites_known():
    ids = [c.id for c in CLAIMS]
    assert len(ids) == len(set(ids))
    assert {c.suite for c in CLAIMS} == set(SUITES)


def test_run_suite_all_passes():
    verdicts = run_suite("all", 2)
    summary = summarize(verdicts)
    assert summary["failed"] == 0
    assert summary["claims"] == summary["passed"] == len(verdicts)


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_selects_only_its_claims(suite):
    verdicts = run_suite(suite, 2)
    wanted = {c.id for c in CLAIMS if c.suite == suite}
    got = {v.claim for v in verdicts}
    assert got <= wanted
    assert all(v.passed for v in verdicts)


def test_run_suite_order_is_registry_order():
    verdicts = run_suite("all", 3)
    ids = [v.claim for v in verdicts]
    registry_rank = {c.id: i for i, c in enumerate(CLAIMS)}
    assert ids == sorted(ids, key=lambda i: registry_rank[i])
    # within one claim, n ascends
    by_claim = {}
    for v in verdicts:
        by_claim.setdefault(v.claim, []).append(v.params["n"])
    for ns in by_claim.values():
        assert ns == sorted(ns)


def test_unknown_suite_and_claims_rejected():
    with pytest.raises(ValueError):
        run_suite("nonsense", 2)
    with pytest.raises(ValueError):
        run_claims(["no.such.claim"], 2)


def test_max_n_bound_respected():
    roundtrip = [v for v in run_suite("lemmas", 5) if v.claim == "core.closed_set_roundtrip"]
    assert [v.params["n"] for v in roundtrip] == [0, 1, 2, 3]


def test_run_claims_subset():
    verdicts = run_claims(["core.enumeration_count"], 4)
    assert [v.params["n"] for v in verdicts] == [0, 1, 2, 3, 4]
    assert all(v.passed for v in verdicts)
    assert [int(v.lhs) for v in verdicts] == [1, 2, 5, 15, 52]
