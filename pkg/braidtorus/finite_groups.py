"""This module contains finite group tables and homomorphism counting.

The oracle catalog holds the groups Z_2, Z_3, S_3, D_4 and Q_8. Their
tables are built from sympy permutation groups and checked against the
group axioms when constructed.
"""

import logging
from collections import defaultdict
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from functools import cache

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import (
    CyclicGroup,
    DihedralGroup,
    SymmetricGroup,
)
from typing_extensions import Self

from braidtorus.errors import (
    InvalidGroupTableError,
    TooLargeError,
    UnknownGeneratorError,
)
from braidtorus.presentations import Presentation
from braidtorus.words import Word

__all__ = (
    "FiniteGroupTable",
    "catalog",
    "quaternion_group",
    "iter_homomorphisms",
    "hom_count",
    "HOM_COUNT_LIMIT",
)

logger = logging.getLogger(__name__)

HOM_COUNT_LIMIT = 10**8


@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite group given by its multiplication table.

    Elements are the integers `0 .. order - 1`.
    """

    name: str
    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identity: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "mul", tuple(map(tuple, self.mul)))
        object.__setattr__(self, "inv", tuple(self.inv))
        self._check_axioms()

    def _check_axioms(self) -> None:
        n = self.order
        elements = range(n)
        if n < 1:
            raise InvalidGroupTableError(self.name, "positive order")
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise InvalidGroupTableError(self.name, "table shape")
        if len(self.inv) != n or self.identity not in elements:
            raise InvalidGroupTableError(self.name, "table shape")
        if any(x not in elements for row in self.mul for x in row):
            raise InvalidGroupTableError(self.name, "closure")
        mul = self.mul
        e = self.identity
        if any(mul[e][a] != a or mul[a][e] != a for a in elements):
            raise InvalidGroupTableError(self.name, "identity")
        if any(
            mul[a][self.inv[a]] != e or mul[self.inv[a]][a] != e
            for a in elements
        ):
            raise InvalidGroupTableError(self.name, "inverses")
        for a in elements:
            for b in elements:
                ab = mul[a][b]
                for c in elements:
                    if mul[ab][c] != mul[a][mul[b][c]]:
                        raise InvalidGroupTableError(
                            self.name, "associativity"
                        )

    @classmethod
    def from_permutation_group(cls, name: str, group: PermutationGroup) -> Self:
        """Tabulate a sympy permutation group, identity first."""
        elements = sorted(group.elements, key=lambda g: g.array_form)
        position = {element: index for index, element in enumerate(elements)}
        return cls(
            name=name,
            order=len(elements),
            mul=tuple(
                tuple(position[a * b] for b in elements) for a in elements
            ),
            inv=tuple(position[~a] for a in elements),
            identity=position[group.identity],
        )

    def evaluate(self, word: Word, assignment: Mapping[str, int]) -> int:
        """Evaluate `word` with its generators sent to table elements."""
        value = self.identity
        for name, exponent in word.letters:
            element = assignment.get(name)
            if element is None:
                raise UnknownGeneratorError(name, tuple(assignment))
            value = self.mul[value][
                element if exponent == 1 else self.inv[element]
            ]
        return value


def quaternion_group() -> PermutationGroup:
    # left multiplications by i and j on [1, i, j, k, -1, -i, -j, -k]
    return PermutationGroup(
        Permutation([1, 4, 3, 6, 5, 0, 7, 2]),
        Permutation([2, 7, 4, 1, 6, 3, 0, 5]),
    )


@cache
def catalog() -> tuple[FiniteGroupTable, ...]:
    """Return the fixed oracle catalog Z_2, Z_3, S_3, D_4, Q_8."""
    groups = (
        ("Z2", CyclicGroup(2)),
        ("Z3", CyclicGroup(3)),
        ("S3", SymmetricGroup(3)),
        ("D4", DihedralGroup(4)),
        ("Q8", quaternion_group()),
    )
    return tuple(
        FiniteGroupTable.from_permutation_group(name, group)
        for name, group in groups
    )


def _compile(
    word: Word, positions: Mapping[str, int]
) -> tuple[tuple[int, int], ...]:
    compiled = []
    for name, exponent in word.letters:
        position = positions.get(name)
        if position is None:
            raise UnknownGeneratorError(name, tuple(positions))
        compiled.append((position, exponent))
    return tuple(compiled)


def iter_homomorphisms(
    p: Presentation, g: FiniteGroupTable
) -> Iterator[tuple[int, ...]]:
    """Enumerate the homomorphisms from `p` to `g`.

    Generators are assigned in presentation order, and a relator is tested
    as soon as the last of its generators is assigned.

    Yields:
        tuple[int, ...]: The image of every generator, in generator order.
    """
    positions = {name: index for index, name in enumerate(p.generators)}
    checks: dict[int, list[tuple[tuple[int, int], ...]]] = defaultdict(list)
    for relator in p.relators:
        compiled = _compile(relator, positions)
        if compiled:
            checks[max(position for position, _ in compiled)].append(compiled)
    mul, inv, identity = g.mul, g.inv, g.identity
    rank = len(p.generators)
    assignment = [identity] * rank

    def holds(compiled: tuple[tuple[int, int], ...]) -> bool:
        value = identity
        for position, exponent in compiled:
            element = assignment[position]
            value = mul[value][element if exponent == 1 else inv[element]]
        return value == identity

    def extend(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == rank:
            yield tuple(assignment)
            return
        for element in range(g.order):
            assignment[depth] = element
            if all(holds(compiled) for compiled in checks.get(depth, ())):
                yield from extend(depth + 1)

    yield from extend(0)


def hom_count(
    p: Presentation, g: FiniteGroupTable, limit: int = HOM_COUNT_LIMIT
) -> int:
    """Count the homomorphisms from `p` to `g` exhaustively.

    Raises:
        TooLargeError: If `g.order ** rank` exceeds `limit`.
    """
    size = g.order ** len(p.generators)
    if size > limit:
        raise TooLargeError(size, limit)
    count = sum(1 for _ in iter_homomorphisms(p, g))
    logger.debug("hom_count into %s: %d", g.name, count)
    return count
