"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

import argparse
import asyncio
import logging
import sys
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from pydantic import ValidationError

from braidtorus import __version__
from braidtorus.braids import artin_presentation, mobius_presentation
from braidtorus.checks import (
    CheckContext,
    arun_all,
    default_registry,
    render_reports,
    run_all,
)
from braidtorus.errors import (
    BraidError,
    CubeError,
    CubeExpressionError,
    OracleError,
    PresentationError,
    UnknownCheckError,
    WordError,
)
from braidtorus.expressions import evaluate_expression
from braidtorus.formats import write_presentation
from braidtorus.mobius import mobius_pipeline
from braidtorus.modes import FORMAT_TYPES, REPORT_MODES, YB6_VARIANTS
from braidtorus.settings import CliConfig, load_config

__all__ = ("main", "build_parser")

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

ALL_CHECKS = "all"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=None,
        help="log progress to stderr, twice for debug output",
    )
    common.add_argument("--out", default=None, help="write output to PATH")

    presentation = argparse.ArgumentParser(add_help=False)
    presentation.add_argument("--strands", type=int, default=None)
    presentation.add_argument("--format", choices=FORMAT_TYPES, default=None)
    presentation.add_argument(
        "--yb6-variant", choices=YB6_VARIANTS, default=None
    )

    parser = argparse.ArgumentParser(
        prog="braidtorus",
        description="Pure braid group presentations of embedding tori.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser(
        "artin",
        parents=[common, presentation],
        help="presentation of the pure braid group of the plane",
    )
    mobius = commands.add_parser(
        "mobius",
        parents=[common, presentation],
        help="presentation of the pure braid group of the Mobius band",
    )
    mobius.add_argument(
        "--pipeline",
        action="store_true",
        default=None,
        help="derive the presentation instead of stating it",
    )
    cube = commands.add_parser(
        "cube",
        parents=[common],
        help="evaluate comp, wedge, vee, bracket or merge expressions",
    )
    cube.add_argument("expression")
    verify = commands.add_parser(
        "verify", parents=[common], help="run verification checks"
    )
    verify.add_argument(
        "checks", nargs="*", default=None, help=f"check names or {ALL_CHECKS}"
    )
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--report", choices=REPORT_MODES, default=None)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--yb6-variant", choices=YB6_VARIANTS, default=None)
    return parser


def _configure_logging(verbose: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def _emit(config: CliConfig, text: str) -> None:
    if config.out is None:
        sys.stdout.write(text)
    else:
        config.out.write_text(text, encoding="utf-8")


def cmd_artin(config: CliConfig) -> int:
    assert config.strands is not None
    p = artin_presentation(config.strands, config.yb6_variant)
    _emit(config, write_presentation(p, config.format))
    return EXIT_OK


def cmd_mobius(config: CliConfig) -> int:
    assert config.strands is not None
    if config.pipeline:
        p = mobius_pipeline(config.strands, variant=config.yb6_variant)
    else:
        p = mobius_presentation(config.strands)
    _emit(config, write_presentation(p, config.format))
    return EXIT_OK


def cmd_cube(config: CliConfig) -> int:
    assert config.expression is not None
    _emit(config, f"{evaluate_expression(config.expression)}\n")
    return EXIT_OK


def _selected_checks(config: CliConfig) -> tuple[str, ...]:
    registry = default_registry()
    if not config.checks or ALL_CHECKS in config.checks:
        return registry.names()
    for name in config.checks:
        registry.get(name)
    return config.checks


def cmd_verify(config: CliConfig) -> int:
    names = _selected_checks(config)
    context = CheckContext(seed=config.seed, variant=config.yb6_variant)
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as executor:
            reports = asyncio.run(
                arun_all(config.seed, executor, context, names=names)
            )
    else:
        reports = run_all(config.seed, context, names=names)
    _emit(config, render_reports(reports, config.report))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED


_COMMANDS = {
    "artin": cmd_artin,
    "mobius": cmd_mobius,
    "cube": cmd_cube,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    arguments = vars(parser.parse_args(argv))
    try:
        config = load_config(arguments)
    except ValidationError as e:
        messages = "; ".join(
            f"{'.'.join(map(str, error['loc'])) or 'arguments'}: {error['msg']}"
            for error in e.errors()
        )
        parser.error(messages)
    _configure_logging(config.verbose)
    try:
        return _COMMANDS[config.command](config)
    except (UnknownCheckError, CubeExpressionError) as e:
        parser.error(str(e))
    except (
        CubeError,
        WordError,
        PresentationError,
        BraidError,
        OracleError,
    ) as e:
        sys.stderr.write(f"braidtorus: error: {e}\n")
        return EXIT_DOMAIN
    except OSError as e:
        sys.stderr.write(f"braidtorus: error: {e}\n")
        return EXIT_DOMAIN
