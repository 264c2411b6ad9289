import pytest

from braidtorus.abelian import AbelianInvariants, abelianization
from braidtorus.errors import NameCollisionError, UnknownGeneratorError
from braidtorus.finite_groups import hom_count
from braidtorus.presentations import Presentation
from braidtorus.van_kampen import (
    MappingTorusInput,
    attach_relators,
    vk_mapping_torus,
)
from braidtorus.words import gen
from tests.utils import presentation, word

x = gen("x")
circle = Presentation(("x",))


def test_klein_bottle():
    klein = vk_mapping_torus(MappingTorusInput(circle, "rho", ((~x, x),)))
    assert klein.generators == ("x", "rho")
    assert klein.relators == (word("x rho^-1 x rho"),)
    assert str(klein) == "<x, rho | x rho^-1 x rho>"
    assert abelianization(klein) == AbelianInvariants(1, (2,))


def test_torus(group_by_name):
    torus = vk_mapping_torus(MappingTorusInput(circle, "t", ((x, x),)))
    assert torus.relators == (word("x^-1 t^-1 x t"),)
    assert abelianization(torus) == AbelianInvariants(2, ())
    assert hom_count(torus, group_by_name["S3"]) == 18


def test_empty_edge_pairs_add_a_free_factor():
    base = presentation("a, b", "a^2")
    result = vk_mapping_torus(MappingTorusInput(base, "rho"))
    assert result == presentation("a, b, rho", "a^2")
    base_invariants = abelianization(base)
    assert abelianization(result) == AbelianInvariants(
        base_invariants.rank + 1, base_invariants.torsion
    )


def test_base_relators_come_first():
    base = presentation("a", "a^3")
    a = gen("a")
    result = vk_mapping_torus(MappingTorusInput(base, "rho", ((a, a**2),)))
    assert result.relators == (word("a^3"), word("a^-1 rho^-1 a^2 rho"))


def test_stable_letter_collision():
    with pytest.raises(NameCollisionError) as error:
        vk_mapping_torus(MappingTorusInput(circle, "x", ((x, x),)))
    assert error.value.name == "x"


def test_invalid_input():
    with pytest.raises(ValueError):
        MappingTorusInput(circle, "1rho")
    with pytest.raises(UnknownGeneratorError):
        MappingTorusInput(circle, "rho", ((x, gen("y")),))


def test_attach_relators():
    p = attach_relators(presentation("a, b"), [word("a b a^-1 b^-1")])
    assert p == presentation("a, b", "a b a^-1 b^-1")
    assert attach_relators(p, []) == p
