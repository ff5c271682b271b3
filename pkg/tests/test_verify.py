from fractions import Fraction

import pytest

from bernstir.bell import bell_scaling_identity_lhs_rhs
from bernstir.bernoulli import supported_methods
from bernstir.verify import cross_verify, identity_suite


def expected_entry_count(max_n):
    return sum(len(supported_methods(n)) for n in range(max_n + 1))


def test_cross_verify_with_known_list_is_clean():
    report = cross_verify(4, known_discrepancies=("alternating",))
    assert report.ok
    assert report.mismatches == ()
    assert report.checked == len(report.entries) == expected_entry_count(4) == 24
    assert set(report.known_discrepancies) == {(2, "alternating"), (4, "alternating")}


def test_cross_verify_reports_alternating_mismatch():
    report = cross_verify(2)
    assert not report.ok
    assert report.mismatches == ((2, "alternating"),)
    assert report.known_discrepancies == ()
    entry = next(e for e in report.entries if e.method == "alternating")
    assert entry.n == 2
    assert entry.value == Fraction(1, 3)
    assert not entry.agrees_with_oracle


def test_cross_verify_max_n_one():
    report = cross_verify(1)
    assert report.ok
    at_one = {e.method: e.value for e in report.entries if e.n == 1}
    assert at_one == {
        "oracle": Fraction(-1, 2),
        "theorem": Fraction(-1, 2),
        "bell": Fraction(-1, 2),
        "logan": Fraction(-1, 2),
    }
    assert all(e.agrees_with_oracle for e in report.entries)


def test_cross_verify_entries_sorted_and_unique():
    report = cross_verify(6, known_discrepancies=("alternating",))
    keys = [(e.n, e.method) for e in report.entries]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_valued_entries_partition_into_agree_and_mismatch():
    report = cross_verify(6)
    valued = [e for e in report.entries if e.value is not None]
    agreed = sum(1 for e in valued if e.agrees_with_oracle)
    flagged = len(report.mismatches) + len(report.known_discrepancies)
    assert agreed + flagged == len(valued)


def test_cross_verify_validates_input():
    with pytest.raises(ValueError):
        cross_verify(0)
    with pytest.raises(ValueError):
        cross_verify(4, known_discrepancies=("bogus",))


def test_identity_suite_all_pass():
    report = identity_suite(8, trials=50, seed=7)
    assert report.ok
    assert report.mismatches == ()
    for name, checked, passed in report.identity_counts:
        assert checked == passed, name
    # four identities, canonical instances plus the random trials
    names = [name for name, _, _ in report.identity_counts]
    assert names == ["egf", "reciprocal", "scaling", "zero-one"]


def test_identity_suite_reports_are_deterministic():
    a = identity_suite(6, trials=20, seed=3)
    b = identity_suite(6, trials=20, seed=3)
    assert a.to_json() == b.to_json()
    # the seed only steers argument drawing, never the amount of checking
    c = identity_suite(6, trials=20, seed=4)
    assert c.checked == a.checked


def test_identity_suite_minimal_run_covers_canonical_cases():
    report = identity_suite(2, trials=1, seed=0)
    assert report.ok
    # the canonical all-ones scaling instance at (n=2, k=1) is the 1/3 case
    assert bell_scaling_identity_lhs_rhs(2, 1, (1, 1)) == (
        Fraction(1, 3),
        Fraction(1, 3),
    )
    assert any(e.method == "scaling" and e.n == 2 for e in report.entries)
    assert any(e.method == "zero-one" and e.n == 2 for e in report.entries)
    # at max_n=4 the canonical zero-one instances reach B_{4,2}(0,1,1) = 3
    wider = identity_suite(4, trials=1, seed=0)
    assert wider.ok
    assert any(e.method == "zero-one" and e.n == 4 for e in wider.entries)


def test_identity_suite_validates_input():
    with pytest.raises(ValueError):
        identity_suite(1, trials=1, seed=0)
    with pytest.raises(ValueError):
        identity_suite(4, trials=0, seed=0)


def test_report_serialization_shape():
    report = cross_verify(2, known_discrepancies=("alternating",))
    doc = report.to_dict()
    assert doc["max_n"] == 2
    assert doc["summary"]["checked"] == report.checked
    assert doc["summary"]["known_discrepancies"] == [[2, "alternating"]]
    assert doc["summary"]["mismatches"] == []
    assert all(
        set(e) == {"n", "method", "value", "agrees_with_oracle"}
        for e in doc["entries"]
    )
    table = report.to_table()
    assert "2 alternating 1/3 NO" in table
    assert "known discrepancies: (2, alternating)" in table
