from math import comb

import pytest

from braidtorus.abelian import AbelianInvariants, abelianization, relation_matrix
from braidtorus.braids import artin_presentation, mobius_presentation
from braidtorus.presentations import Presentation
from tests.utils import presentation


def test_free_group():
    assert abelianization(presentation("a, b, c")) == AbelianInvariants(3, ())
    assert abelianization(Presentation()) == AbelianInvariants(0, ())


def test_cyclic_group():
    assert abelianization(presentation("x", "x^2")) == AbelianInvariants(
        0, (2,)
    )


def test_relation_matrix():
    p = presentation("a, b", "a b a^-1 b^-1", "a^2 b^-3")
    assert relation_matrix(p) == [[0, 0], [2, -3]]


@pytest.mark.parametrize(
    "relators, expected",
    [
        (("x^2", "y^3"), AbelianInvariants(0, (6,))),
        (("x^2", "y^4"), AbelianInvariants(0, (2, 4))),
        (("x^6", "y^4"), AbelianInvariants(0, (2, 12))),
        (("x^2 y^2",), AbelianInvariants(1, (2,))),
        (("x y^-1",), AbelianInvariants(1, ())),
        (("x^3", "x^2"), AbelianInvariants(1, ())),
        (("x^-4", "y^-6", "x^2 y^2"), AbelianInvariants(0, (2, 2))),
    ],
)
def test_torsion_divisors(relators, expected):
    p = presentation("x, y", *relators)
    result = abelianization(p)
    assert result == expected
    assert all(b % a == 0 for a, b in zip(result.torsion, result.torsion[1:]))


def test_commutator_relators_vanish():
    p = presentation("a, b", "a b a^-1 b^-1", "1")
    assert abelianization(p) == AbelianInvariants(2, ())


@pytest.mark.parametrize("k", range(1, 7))
def test_braid_presentations_are_free_abelian(k):
    assert abelianization(artin_presentation(k)) == AbelianInvariants(
        comb(k, 2), ()
    )
    assert abelianization(mobius_presentation(k)) == AbelianInvariants(k, ())


def test_text_form():
    assert str(AbelianInvariants(1, (2,))) == "Z^1 + Z/2"
    assert str(AbelianInvariants(0, ())) == "0"
