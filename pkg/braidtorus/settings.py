"""Module containing the command line configuration.

Values come from the command line, then from `BRAIDTORUS_*` environment
variables (or an env file), then from the defaults below.
"""

from pathlib import Path
from typing import Any, Literal, TypeAlias

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic_settings.sources import DotenvType
from typing_extensions import Self

from braidtorus.modes import (
    DEFAULT_FORMAT,
    DEFAULT_REPORT_MODE,
    DEFAULT_YB6_VARIANT,
    FormatType,
    ReportMode,
    Yb6Variant,
)

__all__ = ("CommandType", "CliConfig", "load_config")

CommandType: TypeAlias = Literal["artin", "mobius", "cube", "verify"]

_NEEDS_STRANDS = ("artin", "mobius")


class CliConfig(BaseSettings, frozen=True):
    """Validated configuration of one command line invocation."""

    model_config = SettingsConfigDict(env_prefix="BRAIDTORUS_", extra="ignore")

    command: CommandType
    strands: int | None = Field(None, ge=1)
    format: FormatType = DEFAULT_FORMAT
    pipeline: bool = False
    yb6_variant: Yb6Variant = DEFAULT_YB6_VARIANT
    seed: int = 0
    report: ReportMode = DEFAULT_REPORT_MODE
    out: Path | None = None
    jobs: int = Field(1, ge=1)
    verbose: int = Field(0, ge=0)
    expression: str | None = None
    checks: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _check_command_arguments(self) -> Self:
        if self.command in _NEEDS_STRANDS and self.strands is None:
            raise ValueError(f"{self.command} requires --strands")
        if self.command == "cube" and not self.expression:
            raise ValueError("cube requires an expression")
        return self


def load_config(
    values: dict[str, Any], env_file: DotenvType | None = None
) -> CliConfig:
    """Build the configuration from explicitly given command line values.

    Args:
        values (dict[str, Any]): Command line values; `None` means not given.
        env_file (DotenvType | None): Optional env file to read.

    Raises:
        ValidationError: If the merged values are invalid.

    Returns:
        CliConfig: The merged configuration.
    """
    given = {key: value for key, value in values.items() if value is not None}
    return CliConfig(_env_file=env_file, **given)  # type: ignore[call-arg]
