"""This module contains the enumerated modes accepted across the package."""

from typing import Any, Literal, TypeAlias

FormatType: TypeAlias = Literal["plain", "json", "cas"]
PLAIN: FormatType = "plain"
JSON: FormatType = "json"
CAS: FormatType = "cas"

FORMAT_TYPES = (PLAIN, JSON, CAS)
DEFAULT_FORMAT: FormatType = PLAIN

Yb6Variant: TypeAlias = Literal["theorem", "proof"]
THEOREM: Yb6Variant = "theorem"
PROOF: Yb6Variant = "proof"

YB6_VARIANTS = (THEOREM, PROOF)
DEFAULT_YB6_VARIANT: Yb6Variant = THEOREM

ReportMode: TypeAlias = Literal["text", "json"]
TEXT_REPORT: ReportMode = "text"
JSON_REPORT: ReportMode = "json"

REPORT_MODES = (TEXT_REPORT, JSON_REPORT)
DEFAULT_REPORT_MODE: ReportMode = TEXT_REPORT

CheckMode: TypeAlias = Literal["exhaustive", "random", "both"]
EXHAUSTIVE: CheckMode = "exhaustive"
RANDOM: CheckMode = "random"
BOTH: CheckMode = "both"


def is_format_type(val: Any) -> bool:
    """Check if a value is a valid presentation format.

    Args:
        val (Any): Any value.

    Returns:
        bool: True if the value is a valid format; otherwise False.
    """
    return val in FORMAT_TYPES


def is_yb6_variant(val: Any) -> bool:
    """Check if a value names a variant of the sixth Artin relation family.

    Args:
        val (Any): Any value.

    Returns:
        bool: True if the value is a valid variant; otherwise False.
    """
    return val in YB6_VARIANTS


def is_report_mode(val: Any) -> bool:
    """Check if a value is a valid report mode.

    Args:
        val (Any): Any value.

    Returns:
        bool: True if the value is a valid report mode; otherwise False.
    """
    return val in REPORT_MODES


def runs_exhaustive(mode: CheckMode) -> bool:
    return mode in (EXHAUSTIVE, BOTH)


def runs_random(mode: CheckMode) -> bool:
    return mode in (RANDOM, BOTH)
