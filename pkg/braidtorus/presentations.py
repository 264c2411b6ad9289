"""This module contains finite presentations and homomorphisms between them."""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from typing_extensions import Self

from braidtorus.errors import (
    CyclicDefinitionError,
    DuplicateGeneratorError,
    InvalidLetterError,
    MissingImageError,
    UnknownGeneratorError,
)
from braidtorus.words import (
    Word,
    canonical_relator,
    cyclically_reduce,
    gen,
    is_generator_name,
    mul,
)

__all__ = (
    "Presentation",
    "GroupHom",
    "apply_hom",
    "relator_from_equality",
    "same_relators",
    "substitute_generators",
)

logger = logging.getLogger(__name__)


def _ensure_over(word: Word, generators: tuple[str, ...]) -> None:
    known = set(generators)
    for name in word.generators:
        if name not in known:
            raise UnknownGeneratorError(name, generators)


@dataclass(frozen=True)
class Presentation:
    """A finite presentation `<generators | relators>`.

    Relators are stored cyclically reduced and in the given order.
    """

    generators: tuple[str, ...] = ()
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        generators = tuple(self.generators)
        seen: set[str] = set()
        for name in generators:
            if not is_generator_name(name):
                raise InvalidLetterError((name, 1))
            if name in seen:
                raise DuplicateGeneratorError(name)
            seen.add(name)
        relators = tuple(cyclically_reduce(word) for word in self.relators)
        for word in relators:
            _ensure_over(word, generators)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "relators", relators)

    @property
    def rank(self) -> int:
        """Number of generators."""
        return len(self.generators)

    def with_relators(self, words: Iterable[Word]) -> Self:
        """Return the quotient by the normal closure of `words`."""
        return type(self)(self.generators, self.relators + tuple(words))

    def with_generators(self, names: Iterable[str]) -> Self:
        """Return the free product with the free group on `names`."""
        return type(self)(self.generators + tuple(names), self.relators)

    def __str__(self) -> str:
        relators = ", ".join(str(word) for word in self.relators)
        return f"<{', '.join(self.generators)} | {relators}>"


def relator_from_equality(u: Word, v: Word) -> Word:
    """Return the relator `u v^-1` encoding the relation `u = v`."""
    return mul(u, v.inverse())


def same_relators(p: Presentation, q: Presentation) -> bool:
    """Compare relator multisets modulo inversion and cyclic rotation."""
    return sorted(canonical_relator(word) for word in p.relators) == sorted(
        canonical_relator(word) for word in q.relators
    )


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by the images of the source generators."""

    source: Presentation
    target: Presentation
    images: tuple[tuple[str, Word], ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        mapped = [name for name, _ in images]
        if sorted(mapped) != sorted(self.source.generators):
            for name in mapped:
                if name not in self.source.generators:
                    raise UnknownGeneratorError(name, self.source.generators)
            missing = [
                name for name in self.source.generators if name not in mapped
            ]
            if missing:
                raise MissingImageError(missing[0])
            raise DuplicateGeneratorError(
                next(name for name in mapped if mapped.count(name) > 1)
            )
        for _, word in images:
            _ensure_over(word, self.target.generators)
        by_name = dict(images)
        object.__setattr__(
            self,
            "images",
            tuple((name, by_name[name]) for name in self.source.generators),
        )

    @classmethod
    def from_mapping(
        cls,
        source: Presentation,
        target: Presentation,
        images: Mapping[str, Word],
    ) -> Self:
        return cls(source, target, tuple(images.items()))

    @classmethod
    def identity(cls, presentation: Presentation) -> Self:
        return cls(
            presentation,
            presentation,
            tuple((name, gen(name)) for name in presentation.generators),
        )

    def image(self, name: str) -> Word:
        for generator, word in self.images:
            if generator == name:
                return word
        raise UnknownGeneratorError(name, self.source.generators)

    def __call__(self, word: Word) -> Word:
        return apply_hom(self, word)


def apply_hom(h: GroupHom, w: Word) -> Word:
    """Substitute the image of every letter of `w` and reduce.

    Raises:
        UnknownGeneratorError: If `w` is not over the source generators.
    """
    images = dict(h.images)
    pieces = []
    for name, exponent in w.letters:
        image = images.get(name)
        if image is None:
            raise UnknownGeneratorError(name, h.source.generators)
        pieces.append(image if exponent == 1 else image.inverse())
    return mul(*pieces)


def _substitute(word: Word, defs: Mapping[str, Word]) -> Word:
    pieces = []
    for name, exponent in word.letters:
        replacement = defs.get(name)
        if replacement is None:
            pieces.append(Word(((name, exponent),)))
        else:
            pieces.append(
                replacement if exponent == 1 else replacement.inverse()
            )
    return mul(*pieces)


def substitute_generators(
    p: Presentation, defs: Mapping[str, Word]
) -> Presentation:
    """Eliminate generators by substituting their defining words.

    Args:
        p (Presentation): The presentation to rewrite.
        defs (Mapping[str, Word]): Replacement word of each eliminated
            generator, over the remaining generators.

    Raises:
        UnknownGeneratorError: If a defined name or a replacement letter is
            not a generator of `p`.
        CyclicDefinitionError: If a replacement word mentions an eliminated
            generator.

    Returns:
        Presentation: The presentation on the remaining generators, without
        the relators that became trivial.
    """
    for name in defs:
        if name not in p.generators:
            raise UnknownGeneratorError(name, p.generators)
    for name, word in defs.items():
        for mentioned in word.generators:
            if mentioned in defs:
                raise CyclicDefinitionError(name, mentioned)
            if mentioned not in p.generators:
                raise UnknownGeneratorError(mentioned, p.generators)
    remaining = tuple(name for name in p.generators if name not in defs)
    relators = []
    for relator in p.relators:
        rewritten = cyclically_reduce(_substitute(relator, defs))
        if not rewritten.is_identity:
            relators.append(rewritten)
    logger.debug(
        "Eliminated %d generators, %d of %d relators survive",
        len(defs),
        len(relators),
        len(p.relators),
    )
    return Presentation(remaining, tuple(relators))
