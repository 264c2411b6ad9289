"""This module contains the presentation-level Van Kampen constructions.

A mapping torus of two maps `f+, f-` from an edge group to a base group is
presented by the base presentation, one stable letter `rho` and, for every
edge generator `w`, the relation `f+(w) = rho^-1 f-(w) rho`. Attaching
2-cells quotients by the words along which they are glued.

Example:
    from braidtorus.van_kampen import MappingTorusInput, vk_mapping_torus
    from braidtorus.presentations import Presentation
    from braidtorus.words import gen

    circle = Presentation(("x",))
    x = gen("x")
    klein = vk_mapping_torus(MappingTorusInput(circle, "rho", ((~x, x),)))

    print(klein)
    #> <x, rho | x rho^-1 x rho>

"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from braidtorus.errors import NameCollisionError, UnknownGeneratorError
from braidtorus.presentations import Presentation
from braidtorus.words import Word, gen, is_generator_name, mul

__all__ = ("MappingTorusInput", "vk_mapping_torus", "attach_relators")

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MappingTorusInput:
    """A base presentation with the edge images of a mapping torus.

    Each pair `(u, v)` holds the plus-side and the minus-side image of one
    edge group generator, both over the base generators.
    """

    base: Presentation
    stable_name: str
    edge_pairs: tuple[tuple[Word, Word], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "edge_pairs", tuple(self.edge_pairs))
        if not is_generator_name(self.stable_name):
            raise ValueError(f"Invalid stable letter {self.stable_name!r}")
        known = set(self.base.generators)
        for pair in self.edge_pairs:
            for word in pair:
                for name in word.generators:
                    if name not in known:
                        raise UnknownGeneratorError(
                            name, self.base.generators
                        )


def vk_mapping_torus(data: MappingTorusInput) -> Presentation:
    """Present the fundamental group of a mapping torus.

    Raises:
        NameCollisionError: If the stable letter is already a generator.

    Returns:
        Presentation: The base generators followed by the stable letter, the
        base relators followed by `u^-1 rho^-1 v rho` for each edge pair.
    """
    if data.stable_name in data.base.generators:
        raise NameCollisionError(data.stable_name)
    rho = gen(data.stable_name)
    relators = tuple(mul(~u, ~rho, v, rho) for u, v in data.edge_pairs)
    logger.debug(
        "Mapping torus with stable letter %s adds %d relators",
        data.stable_name,
        len(relators),
    )
    return data.base.with_generators((data.stable_name,)).with_relators(
        relators
    )


def attach_relators(p: Presentation, words: Iterable[Word]) -> Presentation:
    """Attach one 2-cell along each word."""
    return p.with_relators(words)
