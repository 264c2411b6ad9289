"""This module contains the readers and writers of presentation formats.

Three formats are supported:

- `plain`: a `generators:` line followed by one `relator:` line per relator.
- `json`: an object with `generators` and `relators` (letter pairs).
- `cas`: a free group quotient script in GAP syntax.

Every writer is read back to an equal presentation by the matching reader.
"""

import re

from pydantic import BaseModel, ConfigDict, ValidationError

from braidtorus.errors import (
    PresentationError,
    PresentationFormatError,
    WordError,
)
from braidtorus.modes import CAS, JSON, PLAIN, FormatType, is_format_type
from braidtorus.presentations import Presentation
from braidtorus.words import Word, parse_word

__all__ = (
    "write_presentation",
    "read_presentation",
    "to_plain",
    "from_plain",
    "to_json",
    "from_json",
    "to_cas",
    "from_cas",
)

_GENERATORS_PREFIX = "generators:"
_RELATOR_PREFIX = "relator:"

_CAS_FREE_GROUP = re.compile(r"^F\s*:=\s*FreeGroup\((.*)\)\s*;;\s*$")
_CAS_QUOTIENT = re.compile(r"G\s*:=\s*F\s*/\s*\[(.*?)\]\s*;;", re.DOTALL)
_CAS_IDENTITY = "One(F)"


class PresentationDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    generators: list[str]
    relators: list[list[tuple[str, int]]]


def to_plain(p: Presentation) -> str:
    lines = [f"{_GENERATORS_PREFIX} {', '.join(p.generators)}".rstrip()]
    lines.extend(f"{_RELATOR_PREFIX} {word}" for word in p.relators)
    return "\n".join(lines) + "\n"


def from_plain(text: str) -> Presentation:
    """Read the plain format.

    Raises:
        PresentationFormatError: If the text is not a plain presentation.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines or not lines[0].startswith(_GENERATORS_PREFIX):
        raise PresentationFormatError(PLAIN, "missing generators line")
    body = lines[0][len(_GENERATORS_PREFIX) :].strip()
    generators = tuple(name.strip() for name in body.split(",")) if body else ()
    relators = []
    for line in lines[1:]:
        if not line.startswith(_RELATOR_PREFIX):
            raise PresentationFormatError(PLAIN, f"unexpected line {line!r}")
        try:
            relators.append(
                parse_word(line[len(_RELATOR_PREFIX) :], generators)
            )
        except WordError as e:
            raise PresentationFormatError(PLAIN, str(e))
    try:
        return Presentation(generators, tuple(relators))
    except (PresentationError, WordError) as e:
        raise PresentationFormatError(PLAIN, str(e))


def to_json(p: Presentation) -> str:
    document = PresentationDocument(
        generators=list(p.generators),
        relators=[list(word.letters) for word in p.relators],
    )
    return document.model_dump_json(indent=2) + "\n"


def from_json(text: str) -> Presentation:
    """Read the json format.

    Raises:
        PresentationFormatError: If the document does not validate.
    """
    try:
        document = PresentationDocument.model_validate_json(text)
        return Presentation(
            tuple(document.generators),
            tuple(Word(tuple(letters)) for letters in document.relators),
        )
    except ValidationError as e:
        raise PresentationFormatError(
            JSON, f"{e.error_count()} validation errors"
        )
    except (PresentationError, WordError) as e:
        raise PresentationFormatError(JSON, str(e))


def _cas_word(word: Word) -> str:
    if word.is_identity:
        return _CAS_IDENTITY
    return "*".join(
        name if exponent == 1 else f"{name}^-1"
        for name, exponent in word.letters
    )


def to_cas(p: Presentation) -> str:
    if p.generators:
        names = ", ".join(f'"{name}"' for name in p.generators)
    else:
        names = "0"
    lines = [f"F := FreeGroup({names});;"]
    lines.extend(
        f"{name} := F.{position};;"
        for position, name in enumerate(p.generators, start=1)
    )
    if p.relators:
        lines.append("G := F / [")
        body = [f"  {_cas_word(word)}" for word in p.relators]
        lines.append(",\n".join(body))
        lines.append("];;")
    else:
        lines.append("G := F / [];;")
    return "\n".join(lines) + "\n"


def from_cas(text: str) -> Presentation:
    """Read back a script written by `to_cas`.

    Raises:
        PresentationFormatError: If the script does not have the expected
        free group and quotient statements.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise PresentationFormatError(CAS, "empty script")
    header = _CAS_FREE_GROUP.match(lines[0])
    if header is None:
        raise PresentationFormatError(CAS, "missing FreeGroup statement")
    arguments = header.group(1).strip()
    if arguments == "0":
        generators: tuple[str, ...] = ()
    else:
        generators = tuple(
            part.strip().strip('"') for part in arguments.split(",")
        )
    quotient = _CAS_QUOTIENT.search(text)
    if quotient is None:
        raise PresentationFormatError(CAS, "missing quotient statement")
    relators = []
    for item in quotient.group(1).split(","):
        item = item.strip()
        if not item:
            continue
        try:
            relators.append(
                parse_word(
                    "1" if item == _CAS_IDENTITY else item.replace("*", " "),
                    generators,
                )
            )
        except WordError as e:
            raise PresentationFormatError(CAS, str(e))
    try:
        return Presentation(generators, tuple(relators))
    except (PresentationError, WordError) as e:
        raise PresentationFormatError(CAS, str(e))


_WRITERS = {PLAIN: to_plain, JSON: to_json, CAS: to_cas}
_READERS = {PLAIN: from_plain, JSON: from_json, CAS: from_cas}


def write_presentation(p: Presentation, fmt: FormatType = PLAIN) -> str:
    """Serialize a presentation.

    Args:
        p (Presentation): The presentation to write.
        fmt (FormatType): One of `plain`, `json` or `cas`.

    Raises:
        ValueError: If the format is unknown.

    Returns:
        str: The serialized text, newline terminated.
    """
    if not is_format_type(fmt):
        raise ValueError(f"Unknown presentation format {fmt!r}")
    return _WRITERS[fmt](p)


def read_presentation(text: str, fmt: FormatType = PLAIN) -> Presentation:
    if not is_format_type(fmt):
        raise ValueError(f"Unknown presentation format {fmt!r}")
    return _READERS[fmt](text)
