"""This module contains the pure braid group presentations.

- `artin_presentation(k)`: the classical pure braid group on `k` strands,
  generated by `A_j_i` for `1 <= i < j <= k`.
- `mobius_presentation(k)`: the pure braid group of the Mobius band,
  generated by `rho_1 .. rho_k`.

Relators are emitted family by family, index tuples in lexicographic order,
so equal arguments always produce equal presentations.
"""

import itertools
from collections.abc import Callable, Iterator

from braidtorus.errors import InvalidStrandCountError, InvalidStrandIndexError
from braidtorus.modes import (
    DEFAULT_YB6_VARIANT,
    PROOF,
    Yb6Variant,
    is_yb6_variant,
)
from braidtorus.presentations import GroupHom, Presentation
from braidtorus.words import Word, commutator, gen, mul

__all__ = (
    "artin_generator",
    "mobius_generator",
    "artin_generators",
    "artin_presentation",
    "b_word",
    "mobius_presentation",
    "inclusion_hom",
    "ArtinFactory",
)

ArtinFactory = Callable[[int], Presentation]


def artin_generator(j: int, i: int) -> str:
    return f"A_{j}_{i}"


def mobius_generator(r: int) -> str:
    return f"rho_{r}"


def _ensure_strands(k: int) -> None:
    if k < 1:
        raise InvalidStrandCountError(k)


def _a(j: int, i: int) -> Word:
    return gen(artin_generator(j, i))


def _rho(r: int) -> Word:
    return gen(mobius_generator(r))


def artin_generators(k: int) -> tuple[str, ...]:
    """Names `A_j_i` for `1 <= i < j <= k`, ordered by `(j, i)`."""
    return tuple(
        artin_generator(j, i)
        for j in range(2, k + 1)
        for i in range(1, j)
    )


def _triples(k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, k + 1), 3))


def _quadruples(k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, k + 1), 4))


def _artin_relators(k: int, variant: Yb6Variant) -> Iterator[Word]:
    triples = _triples(k)
    quadruples = _quadruples(k)
    for i, j, r in triples:
        yield commutator(_a(j, i), _a(r, i) * _a(r, j))
    for i, j, r in triples:
        yield commutator(_a(r, i), _a(r, j) * _a(j, i))
    for i, j, r, s in quadruples:
        yield commutator(_a(s, r), _a(j, i))
    for i, j, r, s in quadruples:
        yield commutator(_a(s, i), _a(r, j))
    for i, j, r, s in quadruples:
        yield commutator(_a(s, j), mul(~_a(r, j), _a(r, i), _a(r, j)))
    for i, j, r, s in quadruples:
        if variant == PROOF:
            conjugated = mul(~_a(s, r), _a(r, i), _a(s, r))
        else:
            conjugated = mul(_a(s, r), _a(r, i), ~_a(s, r))
        yield commutator(_a(s, j), conjugated)


def artin_presentation(
    k: int, variant: Yb6Variant = DEFAULT_YB6_VARIANT
) -> Presentation:
    """Return the presentation of the pure braid group on `k` strands.

    Args:
        k (int): Number of strands.
        variant (Yb6Variant): Form of the sixth relation family, `theorem`
            conjugates `A_r_i` by `A_s_r^-1`, `proof` by `A_s_r`.

    Raises:
        InvalidStrandCountError: If `k < 1`.
        ValueError: If the variant is unknown.

    Returns:
        Presentation: `2 C(k,3) + 4 C(k,4)` commutator relators on
        `C(k,2)` generators.
    """
    _ensure_strands(k)
    if not is_yb6_variant(variant):
        raise ValueError(f"Unknown yb6 variant {variant!r}")
    return Presentation(artin_generators(k), tuple(_artin_relators(k, variant)))


def b_word(j: int, i: int, k: int) -> Word:
    """Express `B_j_i` in the `A` generators.

    Returns:
        Word: `A_j_(j-1)^-1 ... A_j_(i+1)^-1 A_j_i A_j_(i+1) ... A_j_(j-1)`.

    Raises:
        InvalidStrandIndexError: If not `1 <= i < j <= k`.
    """
    if not 1 <= i < j <= k:
        raise InvalidStrandIndexError((j, i), k, "1 <= i < j <= k")
    prefix = mul(*(_a(j, m) for m in range(i + 1, j)))
    return mul(~prefix, _a(j, i), prefix)


def _mobius_chain(i: int, j: int) -> Word:
    left = mul(*(commutator(_rho(m), _rho(j)) for m in range(j - 1, i, -1)))
    right = mul(*(commutator(_rho(j), _rho(m)) for m in range(i, j)))
    return left * right


def _mobius_relators(k: int) -> Iterator[Word]:
    rho = _rho
    for i, j in itertools.combinations(range(1, k + 1), 2):
        yield commutator(~rho(i), ~rho(j)) * ~_mobius_chain(i, j)
    triples = _triples(k)
    for i, j, r in triples:
        yield commutator(commutator(rho(i), rho(j)), rho(r))
    for i, j, r in triples:
        yield commutator(commutator(rho(i), ~rho(r)), rho(j))
    for i, j, r in triples:
        yield commutator(
            commutator(rho(j), rho(i)),
            commutator(rho(r), rho(i)) * commutator(rho(r), rho(j)),
        )
    for i, j, r in triples:
        yield commutator(
            commutator(rho(r), rho(i)),
            commutator(rho(r), rho(j)) * commutator(rho(j), rho(i)),
        )
    quadruples = _quadruples(k)
    for i, j, r, s in quadruples:
        yield commutator(
            commutator(rho(s), rho(j)),
            mul(
                commutator(rho(j), rho(r)),
                commutator(rho(r), rho(i)),
                commutator(rho(r), rho(j)),
            ),
        )
    for i, j, r, s in quadruples:
        yield commutator(
            commutator(rho(s), rho(j)),
            mul(
                commutator(rho(s), rho(r)),
                commutator(rho(r), rho(i)),
                commutator(rho(r), rho(s)),
            ),
        )


def mobius_presentation(k: int) -> Presentation:
    """Return the presentation of the pure braid group of the Mobius band.

    Raises:
        InvalidStrandCountError: If `k < 1`.
    """
    _ensure_strands(k)
    return Presentation(
        tuple(mobius_generator(r) for r in range(1, k + 1)),
        tuple(_mobius_relators(k)),
    )


def inclusion_hom(
    k: int, variant: Yb6Variant = DEFAULT_YB6_VARIANT
) -> GroupHom:
    """Map `A_j_i` to `[rho_j, rho_i]`."""
    _ensure_strands(k)
    source = artin_presentation(k, variant)
    return GroupHom(
        source,
        mobius_presentation(k),
        tuple(
            (artin_generator(j, i), commutator(_rho(j), _rho(i)))
            for j in range(2, k + 1)
            for i in range(1, j)
        ),
    )
