"""This module contains check reports and the case log checks write to."""

import json
from collections.abc import Iterable
from typing import Literal, TypeAlias

from pydantic import BaseModel, ConfigDict

from braidtorus.modes import JSON_REPORT, ReportMode, is_report_mode

__all__ = (
    "CheckStatus",
    "PASS",
    "FAIL",
    "SKIPPED",
    "CaseDetail",
    "CheckReport",
    "CaseLog",
    "render_reports",
    "MAX_DETAILS",
)

CheckStatus: TypeAlias = Literal["pass", "fail", "skipped"]
PASS: CheckStatus = "pass"
FAIL: CheckStatus = "fail"
SKIPPED: CheckStatus = "skipped"

MAX_DETAILS = 20


class CaseDetail(BaseModel):
    model_config = ConfigDict(frozen=True)

    case: str
    expected: str
    got: str


class CheckReport(BaseModel):
    """Outcome of one check. A failing report lists its counterexamples."""

    model_config = ConfigDict(frozen=True)

    name: str
    status: CheckStatus
    details: tuple[CaseDetail, ...] = ()
    seed: int = 0
    cases: int = 0

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def render_text(self) -> str:
        lines = [f"{self.name}: {self.status} (cases={self.cases}, seed={self.seed})"]
        lines.extend(
            f"  {detail.case}: expected {detail.expected}, got {detail.got}"
            for detail in self.details
        )
        return "\n".join(lines)


class CaseLog:
    """Collects the cases checked by one check run.

    Mismatches are kept as counterexamples, up to `limit` of them; `note`
    records informative details of passing cases. Skipped cases are listed
    with their reason; a log with skips and no cases reports `skipped`.
    """

    __slots__ = ("cases", "failures", "notes", "skipped", "_limit", "_failed")

    def __init__(self, limit: int = MAX_DETAILS) -> None:
        self.cases = 0
        self.failures: list[CaseDetail] = []
        self.notes: list[CaseDetail] = []
        self.skipped: list[CaseDetail] = []
        self._limit = limit
        self._failed = 0

    @property
    def failed(self) -> int:
        return self._failed

    def expect(self, case: str, expected: object, got: object) -> bool:
        """Record one case; return True when `got` equals `expected`."""
        self.cases += 1
        if expected == got:
            return True
        self._failed += 1
        if len(self.failures) < self._limit:
            self.failures.append(
                CaseDetail(case=case, expected=str(expected), got=str(got))
            )
        return False

    def note(self, case: str, expected: object, got: object) -> None:
        self.notes.append(
            CaseDetail(case=case, expected=str(expected), got=str(got))
        )

    def skip(self, reason: str) -> None:
        self.skipped.append(
            CaseDetail(case="skipped", expected="", got=reason)
        )

    def to_report(self, name: str, seed: int) -> CheckReport:
        if self._failed:
            return CheckReport(
                name=name,
                status=FAIL,
                details=tuple(self.failures),
                seed=seed,
                cases=self.cases,
            )
        if self.skipped and not self.cases:
            return CheckReport(
                name=name,
                status=SKIPPED,
                details=tuple(self.skipped),
                seed=seed,
            )
        return CheckReport(
            name=name,
            status=PASS,
            details=tuple(self.notes + self.skipped),
            seed=seed,
            cases=self.cases,
        )


def render_reports(reports: Iterable[CheckReport], mode: ReportMode) -> str:
    """Render reports as text blocks or as a JSON array, newline terminated."""
    if not is_report_mode(mode):
        raise ValueError(f"Unknown report mode {mode!r}")
    reports = list(reports)
    if mode == JSON_REPORT:
        return (
            json.dumps(
                [report.model_dump(mode="json") for report in reports],
                indent=2,
            )
            + "\n"
        )
    return "".join(report.render_text() + "\n" for report in reports)
