"""This module contains the abelianization invariant of a presentation.

The abelianized group is `Z^g / M` where `M` is spanned by the exponent sum
rows of the relators. Its invariants come from the Smith normal form of the
relation matrix over the integers.
"""

from collections import defaultdict
from typing import NamedTuple

from sympy import ZZ, factorint
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from braidtorus.presentations import Presentation
from braidtorus.words import exponent_sums

__all__ = ("AbelianInvariants", "abelianization", "relation_matrix")


class AbelianInvariants(NamedTuple):
    rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts.extend(f"Z/{order}" for order in self.torsion)
        return " + ".join(parts) or "0"


def relation_matrix(p: Presentation) -> list[list[int]]:
    """Return the exponent sum matrix, one row per relator."""
    rows = []
    for relator in p.relators:
        sums = exponent_sums(relator)
        rows.append([sums.get(name, 0) for name in p.generators])
    return rows


def _canonical_torsion(factors: list[int]) -> tuple[int, ...]:
    exponents: dict[int, list[int]] = defaultdict(list)
    for factor in factors:
        for prime, exponent in factorint(factor).items():
            exponents[prime].append(exponent)
    length = max((len(powers) for powers in exponents.values()), default=0)
    torsion = [1] * length
    for prime, powers in exponents.items():
        for position, exponent in enumerate(sorted(powers, reverse=True)):
            torsion[length - 1 - position] *= prime**exponent
    return tuple(torsion)


def abelianization(p: Presentation) -> AbelianInvariants:
    """Compute the free rank and the torsion divisors of `p` made abelian.

    Args:
        p (Presentation): Any finite presentation.

    Returns:
        AbelianInvariants: The rank and the torsion divisors greater than 1,
        sorted so that each divides the next.
    """
    # zero rows span nothing
    rows = [row for row in relation_matrix(p) if any(row)]
    columns = len(p.generators)
    if not rows or not columns:
        return AbelianInvariants(columns, ())
    matrix = DomainMatrix(
        [[ZZ(value) for value in row] for row in rows],
        (len(rows), columns),
        ZZ,
    )
    factors = [abs(int(value)) for value in invariant_factors(matrix)]
    nonzero = [value for value in factors if value != 0]
    return AbelianInvariants(
        columns - len(nonzero),
        _canonical_torsion([value for value in nonzero if value > 1]),
    )
