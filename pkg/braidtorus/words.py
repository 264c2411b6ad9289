"""This module contains freely reduced words of a free group.

A word is a tuple of letters `(name, exponent)` with the exponent in
{-1, +1}. Every `Word` is freely reduced on construction, so equality of
words is equality of group elements of the free group.

Example:
    from braidtorus.words import commutator, gen

    a, b = gen("a"), gen("b")

    print(commutator(a, b))
    #> a^-1 b^-1 a b

"""

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import TypeAlias

from typing_extensions import Self

from braidtorus.errors import (
    InvalidLetterError,
    UnknownGeneratorError,
    WordSyntaxError,
)

__all__ = (
    "Letter",
    "Word",
    "IDENTITY",
    "gen",
    "reduce",
    "mul",
    "inv",
    "conjugate",
    "commutator",
    "exponent_sums",
    "cyclically_reduce",
    "canonical_relator",
    "parse_word",
    "is_generator_name",
)

Letter: TypeAlias = tuple[str, int]

_NAME_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_TOKEN_PATTERN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def is_generator_name(name: object) -> bool:
    return isinstance(name, str) and _NAME_PATTERN.match(name) is not None


def _validate_letter(letter: object) -> Letter:
    if (
        not isinstance(letter, tuple)
        or len(letter) != 2
        or not is_generator_name(letter[0])
        or letter[1] not in (-1, 1)
        or isinstance(letter[1], bool)
    ):
        raise InvalidLetterError(letter)
    return letter  # type: ignore[return-value]


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for name, exponent in letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -exponent:
            stack.pop()
        else:
            stack.append((name, exponent))
    return tuple(stack)


@dataclass(frozen=True, order=True)
class Word:
    """A freely reduced word; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(_validate_letter(letter) for letter in self.letters)
        object.__setattr__(self, "letters", _free_reduce(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else self.inverse()
        return Word(base.letters * abs(exponent))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            name if exponent == 1 else f"{name}^-1"
            for name, exponent in self.letters
        )

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def generators(self) -> tuple[str, ...]:
        """Generator names in order of first appearance."""
        return tuple(dict.fromkeys(name for name, _ in self.letters))

    def inverse(self) -> "Word":
        return Word(
            tuple((name, -exponent) for name, exponent in reversed(self.letters))
        )

    @classmethod
    def generator(cls, name: str) -> Self:
        return cls(((name, 1),))


IDENTITY = Word()


def gen(name: str) -> Word:
    """Return the one-letter word of a generator."""
    return Word.generator(name)


def reduce(
    letters: Iterable[Letter], generators: Iterable[str] | None = None
) -> Word:
    """Freely reduce a raw letter sequence.

    Args:
        letters (Iterable[Letter]): Raw `(name, exponent)` pairs.
        generators (Iterable[str] | None): Declared generator names. When
            given, every letter must use one of them.

    Raises:
        UnknownGeneratorError: If a letter uses an undeclared generator.
        InvalidLetterError: If a letter is malformed.

    Returns:
        Word: The freely reduced word.
    """
    letters = tuple(letters)
    if generators is not None:
        declared = tuple(generators)
        known = set(declared)
        for letter in letters:
            name = _validate_letter(letter)[0]
            if name not in known:
                raise UnknownGeneratorError(name, declared)
    return Word(letters)


def mul(*words: Word) -> Word:
    """Multiply words left to right."""
    return Word(tuple(letter for word in words for letter in word.letters))


def inv(u: Word) -> Word:
    return u.inverse()


def conjugate(u: Word, t: Word) -> Word:
    """Return `t^-1 u t`."""
    return mul(t.inverse(), u, t)


def commutator(a: Word, b: Word) -> Word:
    """Return `[a, b] = a^-1 b^-1 a b`."""
    return mul(a.inverse(), b.inverse(), a, b)


def exponent_sums(w: Word) -> dict[str, int]:
    """Map every generator of `w` to its total exponent."""
    sums: dict[str, int] = {}
    for name, exponent in w.letters:
        sums[name] = sums.get(name, 0) + exponent
    return sums


def cyclically_reduce(w: Word) -> Word:
    """Strip letters cancelling between the two ends of `w`."""
    letters = w.letters
    start, end = 0, len(letters)
    while end - start >= 2:
        first, last = letters[start], letters[end - 1]
        if first[0] != last[0] or first[1] != -last[1]:
            break
        start += 1
        end -= 1
    return Word(letters[start:end])


def _least_rotation(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    if not letters:
        return letters
    return min(
        letters[shift:] + letters[:shift] for shift in range(len(letters))
    )


def canonical_relator(w: Word) -> Word:
    """Return a representative of `w` modulo inversion and cyclic rotation.

    Two relators define the same normal subgroup generator up to these
    moves if and only if their canonical forms are equal.
    """
    reduced = cyclically_reduce(w)
    return Word(
        min(
            _least_rotation(reduced.letters),
            _least_rotation(reduced.inverse().letters),
        )
    )


def _expand_token(token: str, text: str) -> Sequence[Letter]:
    match = _TOKEN_PATTERN.match(token)
    if match is None:
        raise WordSyntaxError(text, f"unexpected token {token!r}")
    name, power = match.group(1), match.group(2)
    count = 1 if power is None else int(power)
    if count == 0:
        return ()
    exponent = 1 if count > 0 else -1
    return ((name, exponent),) * abs(count)


def parse_word(
    text: str,
    generators: Sequence[str] | None = None,
) -> Word:
    """Parse the plain word form, e.g. `A_2_1 A_3_1^-1`; `1` is the identity.

    Args:
        text (str): Space separated factors `g`, `g^-1` or `g^n`.
        generators (Sequence[str] | None): Declared generators to check.

    Raises:
        WordSyntaxError: If a token is not a factor.
        UnknownGeneratorError: If a factor uses an undeclared generator.

    Returns:
        Word: The reduced word.
    """
    tokens = text.split()
    if not tokens:
        raise WordSyntaxError(text, "empty text, use 1 for the identity")
    if tokens == ["1"]:
        return IDENTITY
    letters: list[Letter] = []
    for token in tokens:
        letters.extend(_expand_token(token, text))
    return reduce(letters, generators)
