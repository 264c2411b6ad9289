"""This module contains the @check decorator and the check registry.

Example:
    from braidtorus.checks import CaseLog, CheckContext, check, collect_checks

    @check("always_true")
    def always_true(params, context: CheckContext, log: CaseLog) -> None:
        log.expect("one is one", 1, 1)

    checks = collect_checks()

    print([c.name for c in checks])
    #> ['always_true']

"""

import inspect
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from types import FrameType, ModuleType
from typing import Any, TypeAlias, TypeVar

from pydantic import BaseModel, ConfigDict

from braidtorus.checks.context import CheckContext
from braidtorus.checks.report import CaseLog
from braidtorus.errors import DuplicatedCheckError, UnknownCheckError

__all__ = (
    "CheckParams",
    "Check",
    "CheckRegistry",
    "check",
    "attach_check",
    "collect_checks",
)

CHECK_ATTR = "__check__"


class CheckParams(BaseModel):
    """Base of the parameter models of checks. Unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid", frozen=True)


CheckFunction: TypeAlias = Callable[[Any, CheckContext, CaseLog], None]

F = TypeVar("F", bound=CheckFunction)


@dataclass(frozen=True)
class Check:
    name: str
    function: CheckFunction
    params_model: type[CheckParams]
    description: str

    def __repr__(self) -> str:
        return f"Check({self.name!r}, {self.function.__module__}:{self.function.__qualname__})"


def attach_check(value: Any, entry: Check) -> None:
    """Attach a check to an object so that collect_checks() finds it.

    Args:
        value (Any): The object to attach the check to.
        entry (Check): The check to attach.
    """
    setattr(value, CHECK_ATTR, entry)


def check(
    name: str | None = None,
    *,
    params: type[CheckParams] = CheckParams,
) -> Callable[[F], F]:
    """Register a function as a named verification check.

    The decorated function receives the validated parameters, the
    `CheckContext` and a `CaseLog` to record its cases in.

    Args:
        name (str | None, optional): Name of the check. Defaults to the
            function name.
        params (type[CheckParams], optional): Parameter model of the check.

    Returns:
        Callable[[F], F]: The decorator, returning the function unchanged.
    """

    def decorator(function: F) -> F:
        doc = inspect.getdoc(function) or ""
        attach_check(
            function,
            Check(
                name=name or function.__name__,
                function=function,
                params_model=params,
                description=doc.splitlines()[0] if doc else "",
            ),
        )
        return function

    return decorator


def _extract_check(item: Any) -> Iterator[Check]:
    if isinstance(item, Check):
        yield item
    elif callable(item):
        entry = getattr(item, CHECK_ATTR, None)
        if isinstance(entry, Check):
            yield entry


def collect_checks(*namespaces: ModuleType | Mapping[str, Any]) -> list[Check]:
    """Collect the checks defined in the given namespaces, in order.

    Without arguments the globals of the caller are collected.
    """
    if not namespaces:
        currentframe = inspect.currentframe()
        assert isinstance(currentframe, FrameType)
        caller_frame = currentframe.f_back
        assert isinstance(caller_frame, FrameType)
        namespaces = (caller_frame.f_globals,)

    def iter_checks() -> Iterator[Check]:
        for namespace in namespaces:
            mapping = (
                namespace.__dict__
                if isinstance(namespace, ModuleType)
                else namespace
            )
            for item in mapping.values():
                yield from _extract_check(item)

    return list(iter_checks())


class CheckRegistry:
    """Named checks in registration order."""

    __slots__ = ("_checks",)

    def __init__(self, checks: Iterable[Check] | None = None) -> None:
        self._checks: dict[str, Check] = {}
        if checks is not None:
            self.register_checks(checks)

    def register_check(self, entry: Check) -> None:
        existing = self._checks.get(entry.name)
        if existing is not None:
            raise DuplicatedCheckError(entry, existing)
        self._checks[entry.name] = entry

    def register_checks(self, checks: Iterable[Check]) -> None:
        for entry in checks:
            self.register_check(entry)

    def get(self, name: str) -> Check:
        entry = self._checks.get(name)
        if entry is None:
            raise UnknownCheckError(name, tuple(self._checks))
        return entry

    def names(self) -> tuple[str, ...]:
        return tuple(self._checks)

    def __contains__(self, name: object) -> bool:
        return name in self._checks

    def __iter__(self) -> Iterator[Check]:
        return iter(self._checks.values())

    def __len__(self) -> int:
        return len(self._checks)
