"""This module contains the coset enumeration oracle.

Presentations are handed to sympy as an `FpGroup` and enumerated with its
relator-based Todd-Coxeter strategy (`coset_enumeration_r`). Running out
of the coset budget returns `Overflow`, never a claim that the index is
infinite.

Example:
    from braidtorus.cosets import todd_coxeter
    from braidtorus.presentations import Presentation
    from braidtorus.words import parse_word

    z5 = Presentation(("x",), (parse_word("x^5"),))

    print(todd_coxeter(z5, max_cosets=5))
    #> 5

"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from sympy import Symbol
from sympy.combinatorics.coset_table import coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import (
    FreeGroup,
    FreeGroupElement,
    free_group,
)

from braidtorus.errors import UnknownGeneratorError
from braidtorus.presentations import Presentation
from braidtorus.words import Word

__all__ = ("Overflow", "todd_coxeter", "DEFAULT_MAX_COSETS")

logger = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 100_000

_OVERFLOW_MESSAGE = "the coset enumeration has defined more than"


@dataclass(frozen=True)
class Overflow:
    """The enumeration was stopped before it closed."""

    max_cosets: int

    def __str__(self) -> str:
        return f"overflow: more than {self.max_cosets} cosets needed"


def _to_element(
    word: Word,
    identity: FreeGroupElement,
    generators: dict[str, FreeGroupElement],
) -> FreeGroupElement:
    element = identity
    for name, exponent in word.letters:
        letter = generators.get(name)
        if letter is None:
            raise UnknownGeneratorError(name, tuple(generators))
        element = element * letter**exponent
    return element


def _to_elements(
    words: Iterable[Word],
    identity: FreeGroupElement,
    generators: dict[str, FreeGroupElement],
) -> list[FreeGroupElement]:
    elements = (_to_element(word, identity, generators) for word in words)
    return [element for element in elements if element != identity]


def _free_generators(
    names: Sequence[str],
) -> tuple[FreeGroup, dict[str, FreeGroupElement]]:
    free, *letters = free_group([Symbol(name) for name in names])
    return free, dict(zip(names, letters))


def todd_coxeter(
    p: Presentation,
    subgroup: Iterable[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> int | Overflow:
    """Enumerate the cosets of the subgroup generated by `subgroup`.

    Args:
        p (Presentation): The presented group.
        subgroup (Iterable[Word]): Generators of the subgroup, over the
            generators of `p`. Empty for the trivial subgroup.
        max_cosets (int): Most cosets the table may hold.

    Raises:
        ValueError: If `max_cosets` is smaller than 1.
        UnknownGeneratorError: If a word is not over the generators of `p`.

    Returns:
        int | Overflow: The index when the enumeration closes, otherwise an
        `Overflow` value.
    """
    if max_cosets < 1:
        raise ValueError(f"max_cosets must be at least 1, got {max_cosets}")
    free, generators = _free_generators(p.generators)
    identity = free.identity
    subgroup_elements = _to_elements(subgroup, identity, generators)
    if not generators:
        return 1
    group = FpGroup(free, _to_elements(p.relators, identity, generators))
    try:
        table = coset_enumeration_r(
            group, subgroup_elements, max_cosets=max_cosets
        )
    except ValueError as e:
        if not str(e).startswith(_OVERFLOW_MESSAGE):
            raise
        logger.debug("Coset enumeration overflow at %d cosets", max_cosets)
        return Overflow(max_cosets)
    table.compress()
    index = len(table.table)
    logger.debug("Coset enumeration closed with index %d", index)
    return index
