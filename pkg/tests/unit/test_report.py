import json

import pytest

from braidtorus.checks import CaseLog, CheckReport, render_reports
from braidtorus.checks.report import FAIL, PASS, SKIPPED


def test_passing_log():
    log = CaseLog()
    assert log.expect("one", 1, 1)
    log.note("one", "1", "1")
    report = log.to_report("sample", seed=5)
    assert report.status == PASS
    assert report.passed
    assert report.cases == 1
    assert report.seed == 5
    assert [d.case for d in report.details] == ["one"]


def test_failing_log_keeps_counterexamples():
    log = CaseLog(limit=2)
    for value in range(5):
        log.expect(f"case {value}", 0, value)
    log.note("ignored", "", "")
    report = log.to_report("sample", seed=0)
    assert report.status == FAIL
    assert not report.passed
    assert log.failed == 4
    assert report.cases == 5
    assert [(d.case, d.expected, d.got) for d in report.details] == [
        ("case 1", "0", "1"),
        ("case 2", "0", "2"),
    ]


def test_skipped_log():
    log = CaseLog()
    log.skip("nothing to do")
    report = log.to_report("sample", seed=0)
    assert report.status == SKIPPED
    assert report.passed
    assert report.details[0].got == "nothing to do"


def test_skips_are_listed_after_notes():
    log = CaseLog()
    log.skip("too large")
    log.expect("one", 1, 1)
    log.note("one", "1", "1")
    report = log.to_report("sample", seed=0)
    assert report.status == PASS
    assert [(d.case, d.got) for d in report.details] == [
        ("one", "1"),
        ("skipped", "too large"),
    ]


def test_skip_with_cases_still_reports():
    log = CaseLog()
    log.skip("partial")
    log.expect("one", 1, 2)
    assert log.to_report("sample", seed=0).status == FAIL


def test_render_text():
    log = CaseLog()
    log.expect("k=2", 3, 4)
    text = render_reports([log.to_report("counts", seed=1)], "text")
    assert text == "counts: fail (cases=1, seed=1)\n  k=2: expected 3, got 4\n"


def test_render_json():
    reports = [
        CheckReport(name="a", status=PASS, cases=3),
        CheckReport(name="b", status=SKIPPED),
    ]
    document = json.loads(render_reports(reports, "json"))
    assert [r["name"] for r in document] == ["a", "b"]
    assert document[0] == {
        "name": "a",
        "status": "pass",
        "details": [],
        "seed": 0,
        "cases": 3,
    }


def test_render_unknown_mode():
    with pytest.raises(ValueError):
        render_reports([], "yaml")  # type: ignore[arg-type]
