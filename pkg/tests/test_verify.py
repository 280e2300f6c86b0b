"""Smoke tests for the bundled verification checks (quick scales)."""

from completequadrics import verify

EXPECTED_ORDER = [
    "chow-form-identity",
    "intersection-table",
    "degeneration-counts",
    "boundary-pencil-numbers",
    "canonical-class",
    "class-derivation",
    "rank2-curve-pairing",
    "wedge-contraction",
    "chow-limits",
    "chamber-partition",
    "degree-gap-disclosure",
]


def test_run_all_quick_passes():
    results = verify.run_all(seed=1, quick=True)
    assert [r.name for r in results] == EXPECTED_ORDER
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_result_json_shape():
    res = verify.check_table()
    js = res.to_json()
    assert set(js) == {"name", "statement", "passed", "details"}
    assert js["passed"] is True


def test_statements_are_informative():
    for res in verify.run_all(seed=2, quick=True):
        assert len(res.statement) > 20
        assert res.name == res.name.lower()
