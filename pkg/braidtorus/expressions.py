"""This module evaluates cube expressions such as `wedge(8:{2,4,6}, 18:{3,5,7})`.

Grammar::

    expr    := literal | op "(" expr ("," expr)* ")"
    op      := "comp" | "wedge" | "vee" | "bracket" | "merge"
    literal := n ":{" indices "}" [ "/[" signs "]" ]

`comp` takes one index set, `wedge`, `vee` and `bracket` take two index
sets, `merge` takes two signed index sets and returns a signed index set.
"""

import re
from collections.abc import Callable
from typing import TypeAlias

from braidtorus.cube import (
    IndexSet,
    SignedIndexSet,
    bracket,
    complement,
    merge_signs,
    vee,
    wedge,
)
from braidtorus.errors import CubeError, CubeExpressionError

__all__ = ("CubeValue", "evaluate_expression")

CubeValue: TypeAlias = IndexSet | SignedIndexSet

_TOKEN = re.compile(
    r"\s*(?:(?P<literal>\d+\s*:\s*\{[^{}]*\}(?:\s*/\s*\[[^\[\]]*\])?)"
    r"|(?P<name>[a-z]+)|(?P<punct>[(),]))"
)

_INDEX_OPERATIONS: dict[str, Callable[..., IndexSet]] = {
    "comp": complement,
    "wedge": wedge,
    "vee": vee,
    "bracket": bracket,
}
_ARITY = {"comp": 1, "wedge": 2, "vee": 2, "bracket": 2, "merge": 2}


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None or match.end() == position:
            raise CubeExpressionError(
                text, f"unexpected character at {position}"
            )
        kind = match.lastgroup
        assert kind is not None
        tokens.append((kind, match.group(kind)))
        position = match.end()
    return tokens


class _Parser:
    __slots__ = ("_text", "_tokens", "_position")

    def __init__(self, text: str) -> None:
        self._text = text
        self._tokens = _tokenize(text)
        self._position = 0

    def _error(self, reason: str) -> CubeExpressionError:
        return CubeExpressionError(self._text, reason)

    def _next(self) -> tuple[str, str]:
        if self._position >= len(self._tokens):
            raise self._error("unexpected end of expression")
        token = self._tokens[self._position]
        self._position += 1
        return token

    def _expect(self, punct: str) -> None:
        kind, value = self._next()
        if kind != "punct" or value != punct:
            raise self._error(f"expected {punct!r}, got {value!r}")

    def parse(self) -> CubeValue:
        value = self._expression()
        if self._position != len(self._tokens):
            raise self._error("trailing input")
        return value

    def _expression(self) -> CubeValue:
        kind, value = self._next()
        if kind == "literal":
            try:
                if "/" in value:
                    return SignedIndexSet.parse(value)
                return IndexSet.parse(value)
            except (CubeError, ValueError) as e:
                raise self._error(str(e))
        if kind != "name" or value not in _ARITY:
            raise self._error(f"unknown operation {value!r}")
        self._expect("(")
        arguments = [self._expression()]
        while True:
            kind, punct = self._next()
            if kind == "punct" and punct == ")":
                break
            if kind != "punct" or punct != ",":
                raise self._error(f"expected ',' or ')', got {punct!r}")
            arguments.append(self._expression())
        return self._apply(value, arguments)

    def _apply(self, operation: str, arguments: list[CubeValue]) -> CubeValue:
        if len(arguments) != _ARITY[operation]:
            raise self._error(
                f"{operation} takes {_ARITY[operation]} arguments, got {len(arguments)}"
            )
        if operation == "merge":
            if not all(isinstance(a, SignedIndexSet) for a in arguments):
                raise self._error("merge takes signed index sets")
            return merge_signs(*arguments)  # type: ignore[arg-type]
        if not all(isinstance(a, IndexSet) for a in arguments):
            raise self._error(f"{operation} takes index sets")
        return _INDEX_OPERATIONS[operation](*arguments)


def evaluate_expression(text: str) -> CubeValue:
    """Evaluate a cube expression.

    Raises:
        CubeExpressionError: If the text does not follow the grammar.
        AmbientMismatchError: If operands have incompatible ambients.

    Returns:
        CubeValue: The resulting index set or signed index set.
    """
    return _Parser(text).parse()
