"""This module contains the derivation of the Mobius band presentation.

The pipeline runs in three stages:

1. `mobius_stage1`: starting from the Artin presentation of `P_k`, one
   mapping torus per strand `r` adds the letter `rho_r` and the relators
   `R1` given by the two edge maps.
2. `mobius_two_cell_relators`: the two 2-cells of every pair `p < q`
   attached along their boundary words (the relators `R2`).
3. `mobius_pipeline`: eliminate every `A_j_i` by `[rho_j, rho_i]`, which
   leaves a presentation on `rho_1 .. rho_k` only.
"""

import itertools
import logging
from collections.abc import Iterator

from braidtorus.braids import (
    artin_generator,
    artin_presentation,
    b_word,
    mobius_generator,
)
from braidtorus.errors import (
    InvalidSideError,
    InvalidStrandCountError,
    InvalidStrandIndexError,
)
from braidtorus.modes import DEFAULT_YB6_VARIANT, Yb6Variant
from braidtorus.presentations import (
    GroupHom,
    Presentation,
    apply_hom,
    substitute_generators,
)
from braidtorus.van_kampen import (
    MappingTorusInput,
    attach_relators,
    vk_mapping_torus,
)
from braidtorus.words import Word, commutator, gen, mul

__all__ = (
    "mobius_edge_images",
    "r1_relators",
    "mobius_stage1",
    "mobius_two_cell_relators",
    "mobius_pipeline",
)

logger = logging.getLogger(__name__)


def _a(j: int, i: int) -> Word:
    return gen(artin_generator(j, i))


def _rho(r: int) -> Word:
    return gen(mobius_generator(r))


def _edge_image(j: int, i: int, r: int, side: int) -> Word:
    if j < r:
        return _a(j, i)
    if r <= i:
        return _a(j + 1, i + 1)
    if side < 0:
        return _a(j + 1, i)
    return mul(~_a(j + 1, r), _a(j + 1, i), _a(j + 1, r))


def mobius_edge_images(
    k: int,
    r: int,
    side: int,
    variant: Yb6Variant = DEFAULT_YB6_VARIANT,
) -> GroupHom:
    """Return the edge map of side `side` for the strand `r`.

    The map goes from `P_(k-1)` to `P_k`, the strand `r` being the one
    pushed across the band.

    Args:
        k (int): Number of strands.
        r (int): The strand crossing the band, `1 <= r <= k`.
        side (int): `-1` or `+1`.
        variant (Yb6Variant): Variant of the source and target presentations.

    Raises:
        InvalidStrandCountError: If `k < 1`.
        InvalidStrandIndexError: If `r` is not in `[1..k]`.
        InvalidSideError: If `side` is neither `-1` nor `+1`.

    Returns:
        GroupHom: The images of the `A_j_i` of `P_(k-1)`.
    """
    if k < 1:
        raise InvalidStrandCountError(k)
    if not 1 <= r <= k:
        raise InvalidStrandIndexError((r,), k, "1 <= r <= k")
    if side not in (-1, 1) or isinstance(side, bool):
        raise InvalidSideError(side)
    source = artin_presentation(k - 1, variant) if k > 1 else Presentation()
    return GroupHom(
        source,
        artin_presentation(k, variant),
        tuple(
            (artin_generator(j, i), _edge_image(j, i, r, side))
            for j in range(2, k)
            for i in range(1, j)
        ),
    )


def r1_relators(k: int) -> tuple[Word, ...]:
    """Enumerate `R1` directly over the generators of `P_k` and the `rho_r`.

    `[A_j_i, rho_r]` for `i < j < r` or `r < i < j`, and
    `A_j_r^-1 A_j_i A_j_r rho_r^-1 A_j_i^-1 rho_r` for `i < r < j`.
    """
    if k < 1:
        raise InvalidStrandCountError(k)
    relators = []
    for r in range(1, k + 1):
        for i, j in itertools.combinations(range(1, k + 1), 2):
            if j < r or r < i:
                relators.append(commutator(_a(j, i), _rho(r)))
            elif i < r < j:
                relators.append(
                    mul(
                        ~_a(j, r),
                        _a(j, i),
                        _a(j, r),
                        ~_rho(r),
                        ~_a(j, i),
                        _rho(r),
                    )
                )
    return tuple(relators)


def mobius_stage1(
    k: int,
    *,
    variant: Yb6Variant = DEFAULT_YB6_VARIANT,
    base: Presentation | None = None,
) -> Presentation:
    """Adjoin `rho_1 .. rho_k` to `P_k` by one mapping torus per strand.

    Args:
        k (int): Number of strands.
        variant (Yb6Variant): Variant of the Artin presentations used.
        base (Presentation | None): Replacement for the Artin presentation
            of `P_k`, on the same generators.

    Raises:
        InvalidStrandCountError: If `k < 1`.

    Returns:
        Presentation: Generators of `P_k` then `rho_1 .. rho_k`; relators of
        `P_k` then `R1`.
    """
    if k < 1:
        raise InvalidStrandCountError(k)
    current = artin_presentation(k, variant) if base is None else base
    for r in range(1, k + 1):
        plus = mobius_edge_images(k, r, 1, variant)
        minus = mobius_edge_images(k, r, -1, variant)
        pairs = tuple(
            (apply_hom(plus, gen(name)), apply_hom(minus, gen(name)))
            for name in plus.source.generators
        )
        current = vk_mapping_torus(
            MappingTorusInput(current, mobius_generator(r), pairs)
        )
    logger.debug(
        "Stage 1 for k=%d: %d generators, %d relators",
        k,
        len(current.generators),
        len(current.relators),
    )
    return current


def _pairs(k: int) -> Iterator[tuple[int, int]]:
    yield from itertools.combinations(range(1, k + 1), 2)


def mobius_two_cell_relators(k: int) -> tuple[Word, ...]:
    """Return the boundary words of the 2-cells, two per pair `p < q`.

    For each pair, the cell at `s` gives `rho_q rho_p A_q_p^-1 rho_q^-1
    rho_p^-1` and the cell at `t` gives `B_q_p rho_q rho_p rho_q^-1 rho_p^-1`.

    Raises:
        InvalidStrandCountError: If `k < 2`.
    """
    if k < 2:
        raise InvalidStrandCountError(k, minimum=2)
    relators = []
    for p, q in _pairs(k):
        rho_p, rho_q = _rho(p), _rho(q)
        relators.append(mul(rho_q, rho_p, ~_a(q, p), ~rho_q, ~rho_p))
        relators.append(mul(b_word(q, p, k), rho_q, rho_p, ~rho_q, ~rho_p))
    return tuple(relators)


def mobius_pipeline(
    k: int,
    *,
    variant: Yb6Variant = DEFAULT_YB6_VARIANT,
    base: Presentation | None = None,
) -> Presentation:
    """Derive the presentation of the Mobius band braid group on `rho` only.

    Args:
        k (int): Number of strands.
        variant (Yb6Variant): Variant of the Artin presentations used.
        base (Presentation | None): Replacement for the Artin presentation
            of `P_k`, on the same generators.

    Raises:
        InvalidStrandCountError: If `k < 1`.

    Returns:
        Presentation: A presentation on `rho_1 .. rho_k`.
    """
    stage = mobius_stage1(k, variant=variant, base=base)
    if k >= 2:
        stage = attach_relators(stage, mobius_two_cell_relators(k))
        logger.debug(
            "Attached %d two-cell relators for k=%d", k * (k - 1), k
        )
    defs = {
        artin_generator(j, i): commutator(_rho(j), _rho(i))
        for j in range(2, k + 1)
        for i in range(1, j)
    }
    result = substitute_generators(stage, defs)
    logger.info(
        "Mobius pipeline for k=%d: %d relators on %d generators",
        k,
        len(result.relators),
        len(result.generators),
    )
    return result
