"""This module contains the registered verification checks.

Every check replays a family of identities or invariants and records each
case in its `CaseLog`. Exhaustive bounds default to sizes that finish in a
few seconds each.
"""

import itertools
import logging
import random
from collections.abc import Iterator
from math import comb

from pydantic import Field

from braidtorus.abelian import AbelianInvariants, abelianization
from braidtorus.braids import inclusion_hom, mobius_presentation
from braidtorus.checks.context import CheckContext
from braidtorus.checks.registry import CheckParams, check
from braidtorus.checks.report import CaseLog
from braidtorus.cosets import DEFAULT_MAX_COSETS, todd_coxeter
from braidtorus.cube import (
    CubeMorphism,
    IndexSet,
    SignedIndexSet,
    bracket,
    complement,
    compose,
    index_sets,
    merge_signs,
    morphisms,
    vee,
    wedge,
)
from braidtorus.errors import TooLargeError
from braidtorus.finite_groups import (
    HOM_COUNT_LIMIT,
    catalog,
    hom_count,
    iter_homomorphisms,
)
from braidtorus.mobius import (
    mobius_pipeline,
    mobius_stage1,
    mobius_two_cell_relators,
    r1_relators,
)
from braidtorus.modes import BOTH, CheckMode, runs_exhaustive, runs_random
from braidtorus.presentations import (
    GroupHom,
    Presentation,
    apply_hom,
    same_relators,
)
from braidtorus.van_kampen import MappingTorusInput, vk_mapping_torus
from braidtorus.words import exponent_sums, gen, parse_word

__all__ = (
    "cube_identities",
    "category_laws",
    "artin_counts",
    "mobius_counts",
    "abelianizations",
    "pipeline_equivalence",
    "inclusion_consistency",
    "quaternion_selftest",
    "QUATERNION_PRESENTATION",
)

logger = logging.getLogger(__name__)

QUATERNION_PRESENTATION = Presentation(
    ("x", "y"),
    (
        parse_word("x^4"),
        parse_word("x^2 y^-2"),
        parse_word("y^-1 x y x"),
    ),
)


class CubeIdentitiesParams(CheckParams):
    n_max: int = Field(8, ge=0)
    mode: CheckMode = BOTH
    samples: int = Field(100_000, ge=0)
    random_n_max: int = Field(20, ge=1)


class CategoryLawsParams(CheckParams):
    source_max: int = Field(5, ge=0)


class CountsParams(CheckParams):
    k_max: int = Field(8, ge=1)


class AbelianizationsParams(CheckParams):
    k_max: int = Field(6, ge=1)


class PipelineEquivalenceParams(CheckParams):
    k: int | None = Field(None, ge=1)
    stage1_k_max: int = Field(5, ge=1)
    hom_k_max: int = Field(3, ge=1)
    hom_limit: int = Field(HOM_COUNT_LIMIT, ge=1)


class InclusionConsistencyParams(CheckParams):
    k_max: int = Field(4, ge=1)


class QuaternionSelftestParams(CheckParams):
    max_cosets: int = Field(DEFAULT_MAX_COSETS, ge=1)


def _subsets(n: int) -> Iterator[IndexSet]:
    return index_sets(n)


def _random_subset(rng: random.Random, n: int) -> IndexSet:
    size = rng.randint(0, n)
    return IndexSet(n, tuple(sorted(rng.sample(range(1, n + 1), size))))


def _check_wedge_pair(log: CaseLog, j: IndexSet, i: IndexSet) -> None:
    # j in C^p_q, i in C^n_p
    log.expect(
        f"complement of wedge j={j} i={i}",
        complement(wedge(j, i)),
        vee(complement(j), complement(i)),
    )


def _check_vee_pair(log: CaseLog, j: IndexSet, i: IndexSet) -> None:
    # j in C^(n-p)_q, i in C^n_p
    union = vee(j, i)
    log.expect(
        f"complement of vee j={j} i={i}",
        complement(union),
        wedge(complement(j), complement(i)),
    )
    position = bracket(j, i)
    log.expect(f"bracket selects i j={j} i={i}", i, wedge(position, union))
    log.expect(
        f"bracket complement j={j} i={i}",
        wedge(j, complement(i)),
        wedge(complement(position), union),
    )


def _check_bracket_uniqueness(log: CaseLog, j: IndexSet, i: IndexSet) -> None:
    union = vee(j, i)
    target = wedge(j, complement(i))
    matches = [
        candidate
        for candidate in index_sets(len(union), len(i))
        if wedge(complement(candidate), union) == target
    ]
    log.expect(
        f"unique bracket j={j} i={i}",
        (bracket(j, i),),
        tuple(matches),
    )


def _check_vee_triple(
    log: CaseLog, k: IndexSet, j: IndexSet, i: IndexSet
) -> None:
    # i in C^n_p, j in C^(n-p)_q, k in C^(n-p-q)_r
    outer = bracket(vee(k, j), i)
    inner = bracket(k, vee(j, i))
    log.expect(
        f"bracket of vee k={k} j={j} i={i}",
        outer,
        wedge(bracket(j, i), inner),
    )
    log.expect(
        f"bracket into vee k={k} j={j} i={i}",
        inner,
        vee(bracket(k, j), outer),
    )


def _check_wedge_triple(
    log: CaseLog, k: IndexSet, j: IndexSet, i: IndexSet
) -> None:
    log.expect(
        f"wedge associativity k={k} j={j} i={i}",
        wedge(k, wedge(j, i)),
        wedge(wedge(k, j), i),
    )


def _exhaustive_cube(log: CaseLog, n: int, uniqueness: bool) -> None:
    for i in _subsets(n):
        for j in _subsets(len(i)):
            _check_wedge_pair(log, j, i)
            for k in _subsets(len(j)):
                _check_wedge_triple(log, k, j, i)
        rest = n - len(i)
        for j in _subsets(rest):
            _check_vee_pair(log, j, i)
            if uniqueness:
                _check_bracket_uniqueness(log, j, i)
            for k in _subsets(rest - len(j)):
                _check_vee_triple(log, k, j, i)


def _random_cube(log: CaseLog, rng: random.Random, n_max: int) -> None:
    n = rng.randint(1, n_max)
    i = _random_subset(rng, n)
    j = _random_subset(rng, len(i))
    _check_wedge_pair(log, j, i)
    _check_wedge_triple(log, _random_subset(rng, len(j)), j, i)
    rest = n - len(i)
    j = _random_subset(rng, rest)
    _check_vee_pair(log, j, i)
    _check_vee_triple(log, _random_subset(rng, rest - len(j)), j, i)


@check("cube_identities", params=CubeIdentitiesParams)
def cube_identities(
    params: CubeIdentitiesParams, context: CheckContext, log: CaseLog
) -> None:
    """Replay the complement, wedge, vee and bracket identities."""
    golden_i = IndexSet.parse("18:{2,3,5,7,9,11,13,17}")
    golden_j = IndexSet.parse("10:{1,4,6,9}")
    log.expect(
        "wedge 8:{2,4,6} with i",
        IndexSet.parse("18:{3,7,11}"),
        wedge(IndexSet.parse("8:{2,4,6}"), golden_i),
    )
    log.expect(
        "vee j with i",
        IndexSet.parse("18:{1,2,3,5,7,8,9,11,12,13,16,17}"),
        vee(golden_j, golden_i),
    )
    log.expect(
        "bracket j with i",
        IndexSet.parse("12:{2,3,4,5,7,8,10,12}"),
        bracket(golden_j, golden_i),
    )
    if runs_exhaustive(params.mode):
        for n in range(params.n_max + 1):
            _exhaustive_cube(log, n, uniqueness=n <= 6)
    if runs_random(params.mode):
        rng = context.rng("cube_identities")
        for _ in range(params.samples):
            _random_cube(log, rng, params.random_n_max)


@check("category_laws", params=CategoryLawsParams)
def category_laws(
    params: CategoryLawsParams, context: CheckContext, log: CaseLog
) -> None:
    """Identity and associativity of cube morphism composition."""
    f = CubeMorphism(2, SignedIndexSet.parse("2:{2}/[-]"))
    g = CubeMorphism(1, SignedIndexSet.parse("1:{1}/[+]"))
    log.expect(
        "compose f(1,+) after f(2,-)",
        SignedIndexSet.parse("2:{1,2}/[+,-]"),
        compose(g, f).data,
    )
    log.expect(
        "merge signs 3:{2}/[-] with 2:{1}/[+]",
        SignedIndexSet.parse("3:{1,2}/[+,-]"),
        merge_signs(
            SignedIndexSet.parse("3:{2}/[-]"),
            SignedIndexSet.parse("2:{1}/[+]"),
        ),
    )
    for source in range(params.source_max + 1):
        for f in morphisms(source):
            log.expect(
                f"left identity {f}",
                f,
                compose(CubeMorphism.identity(f.target), f),
            )
            log.expect(
                f"right identity {f}",
                f,
                compose(f, CubeMorphism.identity(f.source)),
            )
            for g in morphisms(f.target):
                gf = compose(g, f)
                for h in morphisms(g.target):
                    log.expect(
                        f"associativity h={h.data} g={g.data} f={f.data}",
                        compose(compose(h, g), f),
                        compose(h, gf),
                    )


def _count_tuples(k: int, size: int) -> int:
    return sum(
        1
        for values in itertools.product(range(1, k + 1), repeat=size)
        if all(a < b for a, b in itertools.pairwise(values))
    )


def _check_zero_exponents(log: CaseLog, label: str, p: Presentation) -> None:
    for position, relator in enumerate(p.relators, start=1):
        sums = {
            name: total
            for name, total in exponent_sums(relator).items()
            if total
        }
        log.expect(f"{label} relator {position} exponent sums", {}, sums)


@check("artin_counts", params=CountsParams)
def artin_counts(
    params: CountsParams, context: CheckContext, log: CaseLog
) -> None:
    """Generator and relator counts of the Artin presentations."""
    for k in range(1, params.k_max + 1):
        p = context.artin_presentation(k)
        log.expect(f"artin k={k} generators", comb(k, 2), len(p.generators))
        log.expect(
            f"artin k={k} relators",
            2 * comb(k, 3) + 4 * comb(k, 4),
            len(p.relators),
        )
        log.expect(
            f"artin k={k} relators by enumeration",
            2 * _count_tuples(k, 3) + 4 * _count_tuples(k, 4),
            len(p.relators),
        )
        _check_zero_exponents(log, f"artin k={k}", p)


@check("mobius_counts", params=CountsParams)
def mobius_counts(
    params: CountsParams, context: CheckContext, log: CaseLog
) -> None:
    """Generator and relator counts of the Mobius presentations."""
    for k in range(1, params.k_max + 1):
        p = mobius_presentation(k)
        log.expect(f"mobius k={k} generators", k, len(p.generators))
        log.expect(
            f"mobius k={k} relators",
            comb(k, 2) + 4 * comb(k, 3) + 2 * comb(k, 4),
            len(p.relators),
        )
        log.expect(
            f"mobius k={k} relators by enumeration",
            _count_tuples(k, 2) + 4 * _count_tuples(k, 3) + 2 * _count_tuples(k, 4),
            len(p.relators),
        )
        if k >= 2:
            log.expect(
                f"two-cell relators k={k}",
                2 * comb(k, 2),
                len(mobius_two_cell_relators(k)),
            )
        _check_zero_exponents(log, f"mobius k={k}", p)


def _circle_torus(twisted: bool) -> Presentation:
    x = gen("x")
    return vk_mapping_torus(
        MappingTorusInput(
            Presentation(("x",)), "rho", (((~x if twisted else x), x),)
        )
    )


@check("abelianizations", params=AbelianizationsParams)
def abelianizations(
    params: AbelianizationsParams, context: CheckContext, log: CaseLog
) -> None:
    """Abelianization of the braid presentations and reference groups."""
    log.expect(
        "klein bottle",
        AbelianInvariants(1, (2,)),
        abelianization(_circle_torus(twisted=True)),
    )
    log.expect(
        "torus",
        AbelianInvariants(2, ()),
        abelianization(_circle_torus(twisted=False)),
    )
    log.expect(
        "<x | x^2>",
        AbelianInvariants(0, (2,)),
        abelianization(Presentation(("x",), (parse_word("x^2"),))),
    )
    for k in range(1, params.k_max + 1):
        log.expect(
            f"artin k={k}",
            AbelianInvariants(comb(k, 2), ()),
            abelianization(context.artin_presentation(k)),
        )
        log.expect(
            f"mobius k={k}",
            AbelianInvariants(k, ()),
            abelianization(mobius_presentation(k)),
        )


def _compare_oracles(
    log: CaseLog,
    label: str,
    left: Presentation,
    right: Presentation,
    hom_limit: int,
) -> None:
    log.expect(
        f"{label} abelianization", abelianization(right), abelianization(left)
    )
    for group in catalog():
        case = f"{label} homomorphisms into {group.name}"
        try:
            expected = hom_count(right, group, limit=hom_limit)
            got = hom_count(left, group, limit=hom_limit)
        except TooLargeError as e:
            log.skip(f"{case}: {e}")
            continue
        log.expect(case, expected, got)


@check("pipeline_equivalence", params=PipelineEquivalenceParams)
def pipeline_equivalence(
    params: PipelineEquivalenceParams, context: CheckContext, log: CaseLog
) -> None:
    """Compare the derived Mobius presentation with the stated one."""
    if params.k is not None:
        ks = [params.k]
    else:
        ks = list(range(1, max(params.stage1_k_max, params.hom_k_max) + 1))
    for k in ks:
        base = context.artin_presentation(k)
        if params.k is not None or k <= params.stage1_k_max:
            stage = mobius_stage1(k, variant=context.variant, base=base)
            expected = Presentation(
                stage.generators, base.relators + r1_relators(k)
            )
            log.expect(
                f"stage 1 k={k} relators match R1",
                True,
                same_relators(stage, expected),
            )
        if params.k is not None or k <= params.hom_k_max:
            derived = mobius_pipeline(k, variant=context.variant, base=base)
            stated = mobius_presentation(k)
            if k == 2:
                matched = same_relators(derived, stated)
                if log.expect(
                    "pipeline k=2 canonical relators", True, matched
                ):
                    log.note(
                        "pipeline k=2",
                        "matched canonical relators",
                        "matched canonical relators",
                    )
            _compare_oracles(
                log, f"pipeline k={k}", derived, stated, params.hom_limit
            )


@check("inclusion_consistency", params=InclusionConsistencyParams)
def inclusion_consistency(
    params: InclusionConsistencyParams, context: CheckContext, log: CaseLog
) -> None:
    """Images of the Artin relators are trivial in the Mobius group."""
    groups = catalog()
    for k in range(1, params.k_max + 1):
        target = mobius_presentation(k)
        source = context.artin_presentation(k)
        inclusion = GroupHom(
            source, target, inclusion_hom(k, context.variant).images
        )
        baseline = abelianization(target)
        solutions = {
            group.name: list(iter_homomorphisms(target, group))
            for group in groups
        }
        for position, relator in enumerate(source.relators, start=1):
            image = apply_hom(inclusion, relator)
            extended = target.with_relators((image,))
            label = f"k={k} artin relator {position}"
            log.expect(
                f"{label} abelianization",
                baseline,
                abelianization(extended),
            )
            for group in groups:
                # homomorphisms of the quotient are the solutions killing image
                survivors = sum(
                    1
                    for values in solutions[group.name]
                    if group.evaluate(
                        image, dict(zip(target.generators, values))
                    )
                    == group.identity
                )
                log.expect(
                    f"{label} homomorphisms into {group.name}",
                    len(solutions[group.name]),
                    survivors,
                )


@check("quaternion_selftest", params=QuaternionSelftestParams)
def quaternion_selftest(
    params: QuaternionSelftestParams, context: CheckContext, log: CaseLog
) -> None:
    """Coset enumeration of the quaternion group of order 8."""
    result = todd_coxeter(QUATERNION_PRESENTATION, (), params.max_cosets)
    got = f"order={result}" if isinstance(result, int) else str(result)
    if log.expect("quaternion presentation", "order=8", got):
        log.note("quaternion presentation", "order=8", got)
    q8 = next(group for group in catalog() if group.name == "Q8")
    log.expect("catalog Q8 order", 8, q8.order)
