"""This module runs registered checks and turns their case logs into reports."""

import asyncio
import dataclasses
import logging
from collections.abc import Iterable, Mapping
from concurrent.futures import ThreadPoolExecutor
from functools import cache, partial
from typing import Any

from pydantic import ValidationError

from braidtorus.checks import suites
from braidtorus.checks.context import CheckContext
from braidtorus.checks.registry import CheckRegistry, collect_checks
from braidtorus.checks.report import CaseLog, CheckReport
from braidtorus.errors import (
    BraidError,
    CubeError,
    InvalidCheckParamsError,
    OracleError,
    PresentationError,
    WordError,
)

__all__ = ("default_registry", "run_check", "run_all", "arun_all")

logger = logging.getLogger(__name__)

_DOMAIN_ERRORS = (CubeError, WordError, PresentationError, BraidError, OracleError)


@cache
def default_registry() -> CheckRegistry:
    """The registry of the built-in checks, in registration order."""
    return CheckRegistry(collect_checks(suites))


def _context(seed: int | None, context: CheckContext | None) -> CheckContext:
    context = context or CheckContext()
    if seed is not None and seed != context.seed:
        context = dataclasses.replace(context, seed=seed)
    return context


def run_check(
    name: str,
    params: Mapping[str, Any] | None = None,
    seed: int | None = None,
    context: CheckContext | None = None,
    registry: CheckRegistry | None = None,
) -> CheckReport:
    """Run one named check.

    Args:
        name (str): A registered check name.
        params (Mapping[str, Any] | None): Parameters, validated against the
            parameter model of the check.
        seed (int | None): Seed of the randomized cases, overriding the one
            of `context`.
        context (CheckContext | None): Shared inputs of the run.
        registry (CheckRegistry | None): Defaults to the built-in checks.

    Raises:
        UnknownCheckError: If the name is not registered.
        InvalidCheckParamsError: If the parameters do not validate.

    Returns:
        CheckReport: The deterministic report of the run.
    """
    entry = (registry or default_registry()).get(name)
    context = _context(seed, context)
    try:
        validated = entry.params_model.model_validate(dict(params or {}))
    except ValidationError as e:
        raise InvalidCheckParamsError(name, str(e))
    log = CaseLog()
    logger.info("Running check %s (seed=%d)", name, context.seed)
    try:
        entry.function(validated, context, log)
    except _DOMAIN_ERRORS as e:
        logger.warning("Check %s raised %s", name, type(e).__name__)
        log.expect("check completes", "no error", f"{type(e).__name__}: {e}")
    report = log.to_report(name, context.seed)
    logger.info("Check %s: %s over %d cases", name, report.status, report.cases)
    return report


def run_all(
    seed: int | None = None,
    context: CheckContext | None = None,
    registry: CheckRegistry | None = None,
    params: Mapping[str, Mapping[str, Any]] | None = None,
    names: Iterable[str] | None = None,
) -> list[CheckReport]:
    """Run checks one after the other, in registration order by default."""
    registry = registry or default_registry()
    params = params or {}
    return [
        run_check(name, params.get(name), seed, context, registry)
        for name in (registry.names() if names is None else names)
    ]


async def arun_all(
    seed: int | None = None,
    executor: ThreadPoolExecutor | None = None,
    context: CheckContext | None = None,
    registry: CheckRegistry | None = None,
    params: Mapping[str, Mapping[str, Any]] | None = None,
    names: Iterable[str] | None = None,
) -> list[CheckReport]:
    """Run checks concurrently on `executor`, reports in the order of `run_all`."""
    registry = registry or default_registry()
    params = params or {}
    selected = tuple(registry.names() if names is None else names)
    for name in selected:
        registry.get(name)
    loop = asyncio.get_running_loop()
    tasks = tuple(
        loop.run_in_executor(
            executor,
            partial(run_check, name, params.get(name), seed, context, registry),
        )
        for name in selected
    )
    return list(await asyncio.gather(*tasks))
