import pytest
from sympy.combinatorics.named_groups import CyclicGroup

from braidtorus.braids import artin_presentation
from braidtorus.checks.suites import QUATERNION_PRESENTATION
from braidtorus.errors import (
    InvalidGroupTableError,
    TooLargeError,
    UnknownGeneratorError,
)
from braidtorus.finite_groups import (
    FiniteGroupTable,
    catalog,
    hom_count,
    iter_homomorphisms,
)
from braidtorus.presentations import Presentation
from tests.utils import presentation, word


def test_catalog(groups):
    assert [(g.name, g.order) for g in groups] == [
        ("Z2", 2),
        ("Z3", 3),
        ("S3", 6),
        ("D4", 8),
        ("Q8", 8),
    ]
    assert catalog() is groups


def test_identity_comes_first(groups):
    assert all(g.identity == 0 for g in groups)


def test_from_permutation_group():
    table = FiniteGroupTable.from_permutation_group("Z4", CyclicGroup(4))
    assert table.order == 4
    assert table.mul[1][table.inv[1]] == table.identity


def test_invalid_tables():
    with pytest.raises(InvalidGroupTableError) as error:
        FiniteGroupTable("bad", 2, ((0, 1), (1, 1)), (0, 1), 0)
    assert error.value.axiom == "inverses"
    with pytest.raises(InvalidGroupTableError) as error:
        FiniteGroupTable("bad", 2, ((0, 1),), (0, 1), 0)
    assert error.value.axiom == "table shape"
    with pytest.raises(InvalidGroupTableError) as error:
        FiniteGroupTable("bad", 2, ((0, 1), (1, 0)), (0, 1), 1)
    assert error.value.axiom == "identity"


def test_evaluate(group_by_name):
    z3 = group_by_name["Z3"]
    generator = next(e for e in range(3) if e != z3.identity)
    assert z3.evaluate(word("x^3"), {"x": generator}) == z3.identity
    assert z3.evaluate(word("x x"), {"x": generator}) == z3.inv[generator]
    with pytest.raises(UnknownGeneratorError):
        z3.evaluate(word("y"), {"x": generator})


def test_free_group_counts(groups):
    for g in groups:
        assert hom_count(presentation("a, b"), g) == g.order**2
        assert hom_count(Presentation(), g) == 1


@pytest.mark.parametrize(
    "relator, counts",
    [
        ("x^2", {"Z2": 2, "Z3": 1, "S3": 4, "D4": 6, "Q8": 2}),
        ("x^3", {"Z2": 1, "Z3": 3, "S3": 3, "D4": 1, "Q8": 1}),
        ("x^4", {"Z2": 2, "Z3": 1, "S3": 4, "D4": 8, "Q8": 8}),
    ],
)
def test_element_orders(group_by_name, relator, counts):
    p = presentation("x", relator)
    assert {
        name: hom_count(p, g) for name, g in group_by_name.items()
    } == counts


def test_commuting_pairs(group_by_name):
    # number of commuting pairs is |G| times the number of conjugacy classes
    p = presentation("a, b", "a b a^-1 b^-1")
    assert hom_count(p, group_by_name["S3"]) == 18
    assert hom_count(p, group_by_name["D4"]) == 40
    assert hom_count(p, group_by_name["Q8"]) == 40


def test_quaternion_presentation(group_by_name):
    # 24 automorphisms, 3 maps onto the center and the trivial map
    assert hom_count(QUATERNION_PRESENTATION, group_by_name["Q8"]) == 28
    assert hom_count(QUATERNION_PRESENTATION, group_by_name["Z3"]) == 1


def test_iter_homomorphisms_yields_assignments(group_by_name):
    z2 = group_by_name["Z2"]
    p = presentation("a, b", "a b")
    assert sorted(iter_homomorphisms(p, z2)) == [(0, 0), (1, 1)]


def test_too_large(group_by_name):
    p = presentation("a, b, c")
    with pytest.raises(TooLargeError) as error:
        hom_count(p, group_by_name["Q8"], limit=100)
    assert error.value.size == 512


def test_artin_three_strands_into_s3(group_by_name):
    # P_3 splits as F_2 x Z, so each central image z contributes |C(z)|^2
    s3 = group_by_name["S3"]
    assert hom_count(artin_presentation(3), s3) == 36 + 3 * 2**2 + 2 * 3**2
