"""Named, reproducible verification checks with machine-readable reports."""

from .context import CheckContext
from .registry import (
    Check,
    CheckParams,
    CheckRegistry,
    attach_check,
    check,
    collect_checks,
)
from .report import CaseDetail, CaseLog, CheckReport, render_reports
from .runner import arun_all, default_registry, run_all, run_check

__all__ = [
    "CheckContext",
    "Check",
    "CheckParams",
    "CheckRegistry",
    "attach_check",
    "check",
    "collect_checks",
    "CaseDetail",
    "CaseLog",
    "CheckReport",
    "render_reports",
    "arun_all",
    "default_registry",
    "run_all",
    "run_check",
]
