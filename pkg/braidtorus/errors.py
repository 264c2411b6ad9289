"""Module containing errors classes."""

from collections.abc import Sequence
from typing import Any


class CubeError(Exception):
    """Base class for all cube category errors."""

    pass


class InvalidIndexSetError(CubeError, ValueError):
    """Raised when indices are not strictly increasing inside [1..n]."""

    def __init__(self, ambient: int, indices: Sequence[int], reason: str):
        self.ambient = ambient
        self.indices = tuple(indices)
        super().__init__(
            f"Invalid index set {tuple(indices)!r} in [1..{ambient}]: {reason}"
        )


class InvalidSignError(CubeError, ValueError):
    """Raised when signs are not a vector over {-1, +1} of the right length."""

    def __init__(self, signs: Sequence[Any], expected_length: int):
        self.signs = tuple(signs)
        self.expected_length = expected_length
        super().__init__(
            f"Invalid signs {tuple(signs)!r}, expected {expected_length} values in {{-1, +1}}"
        )


class AmbientMismatchError(CubeError, ValueError):
    """Raised when two index sets cannot be combined by an operation."""

    def __init__(self, operation: str, left: Any, right: Any, expected: int):
        self.operation = operation
        self.left = left
        self.right = right
        self.expected = expected
        super().__init__(
            f"{operation}({left}, {right}): left ambient must be {expected}"
        )


class SourceTargetMismatchError(CubeError, ValueError):
    """Raised when composing cube morphisms that do not chain."""

    def __init__(self, outer: Any, inner: Any):
        self.outer = outer
        self.inner = inner
        super().__init__(
            f"Cannot compose {outer} after {inner}: source {outer.source} != target {inner.target}"
        )


class CubeExpressionError(CubeError, ValueError):
    """Raised when a cube expression cannot be parsed."""

    def __init__(self, expression: str, reason: str):
        self.expression = expression
        super().__init__(f"Invalid cube expression {expression!r}: {reason}")


class WordError(Exception):
    """Base class for all free group word errors."""

    pass


class UnknownGeneratorError(WordError, KeyError):
    """Raised when a word mentions a generator that is not declared."""

    def __init__(self, name: str, generators: Sequence[str]):
        self.name = name
        self.generators = tuple(generators)
        super().__init__(
            f"Unknown generator {name!r}, declared: {', '.join(generators) or '(none)'}"
        )

    def __str__(self) -> str:
        return str(self.args[0])


class InvalidLetterError(WordError, ValueError):
    """Raised for a letter whose name or exponent is not valid."""

    def __init__(self, letter: Any):
        self.letter = letter
        super().__init__(
            f"Invalid letter {letter!r}, expected (name, +1) or (name, -1)"
        )


class WordSyntaxError(WordError, ValueError):
    """Raised when a textual word cannot be parsed."""

    def __init__(self, text: str, reason: str):
        self.text = text
        super().__init__(f"Cannot parse word {text!r}: {reason}")


class PresentationError(Exception):
    """Base class for all presentation related errors."""

    pass


class DuplicateGeneratorError(PresentationError, ValueError):
    """Raised when a generator name is declared twice."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Generator {name!r} is declared more than once")


class CyclicDefinitionError(PresentationError, ValueError):
    """Raised when a replacement word mentions an eliminated generator."""

    def __init__(self, name: str, mentioned: str):
        self.name = name
        self.mentioned = mentioned
        super().__init__(
            f"Definition of {name!r} mentions eliminated generator {mentioned!r}"
        )


class MissingImageError(PresentationError, ValueError):
    """Raised when a homomorphism leaves a source generator without image."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"No image given for generator {name!r}")


class NameCollisionError(PresentationError, ValueError):
    """Raised when a stable letter name is already a generator."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Stable letter {name!r} is already a generator")


class PresentationFormatError(PresentationError, ValueError):
    """Raised when a serialized presentation cannot be read."""

    def __init__(self, fmt: str, reason: str):
        self.format = fmt
        super().__init__(f"Cannot read {fmt} presentation: {reason}")


class BraidError(Exception):
    """Base class for all braid presentation errors."""

    pass


class InvalidStrandCountError(BraidError, ValueError):
    """Raised when the number of strands is out of range."""

    def __init__(self, k: int, minimum: int = 1):
        self.k = k
        self.minimum = minimum
        super().__init__(f"Strand count must be at least {minimum}, got {k}")


class InvalidStrandIndexError(BraidError, IndexError):
    """Raised when strand indices do not satisfy the required ordering."""

    def __init__(self, indices: Sequence[int], k: int, condition: str):
        self.indices = tuple(indices)
        self.k = k
        super().__init__(
            f"Strand indices {tuple(indices)!r} violate {condition} for k={k}"
        )


class InvalidSideError(BraidError, ValueError):
    """Raised when a mapping torus side is not -1 or +1."""

    def __init__(self, side: Any):
        self.side = side
        super().__init__(f"Side must be -1 or +1, got {side!r}")


class OracleError(Exception):
    """Base class for all algebraic oracle errors."""

    pass


class TooLargeError(OracleError):
    """Raised when an exhaustive enumeration exceeds its guard."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(
            f"Enumeration of {size} assignments exceeds the limit of {limit}"
        )


class InvalidGroupTableError(OracleError, ValueError):
    """Raised when a multiplication table violates the group axioms."""

    def __init__(self, name: str, axiom: str):
        self.name = name
        self.axiom = axiom
        super().__init__(f"Table {name!r} violates {axiom}")


class CheckError(Exception):
    """Base class for all verification check errors."""

    pass


class UnknownCheckError(CheckError, KeyError):
    """Raised when a check name is not registered."""

    def __init__(self, name: str, available: Sequence[str]):
        self.name = name
        self.available = tuple(available)
        super().__init__(
            f"Unknown check {name!r}, available: {', '.join(available)}"
        )

    def __str__(self) -> str:
        return str(self.args[0])


class DuplicatedCheckError(CheckError):
    """Raised when two checks are registered under the same name."""

    def __init__(self, to_add: Any, existing: Any) -> None:
        self.to_add = to_add
        self.existing = existing
        super().__init__(
            f"Check {to_add!r} conflict with existing check {existing!r}"
        )


class InvalidCheckParamsError(CheckError, ValueError):
    """Raised when the parameters of a check fail validation."""

    def __init__(self, name: str, reason: str):
        self.name = name
        super().__init__(f"Invalid parameters for check {name!r}: {reason}")
