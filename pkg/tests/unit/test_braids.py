from math import comb

import pytest

from braidtorus.braids import (
    artin_generators,
    artin_presentation,
    b_word,
    inclusion_hom,
    mobius_presentation,
)
from braidtorus.errors import InvalidStrandCountError, InvalidStrandIndexError
from braidtorus.modes import PROOF, THEOREM
from braidtorus.words import IDENTITY, commutator, exponent_sums, gen
from tests.utils import word


def test_artin_small():
    assert artin_presentation(1).generators == ()
    assert artin_presentation(1).relators == ()
    p = artin_presentation(2)
    assert p.generators == ("A_2_1",)
    assert p.relators == ()


def test_artin_four_strands():
    p = artin_presentation(4)
    assert p.generators == (
        "A_2_1",
        "A_3_1",
        "A_3_2",
        "A_4_1",
        "A_4_2",
        "A_4_3",
    )
    assert len(p.relators) == 12


def test_artin_first_families_three_strands():
    p = artin_presentation(3)
    a21, a31, a32 = gen("A_2_1"), gen("A_3_1"), gen("A_3_2")
    assert p.relators == (
        commutator(a21, a31 * a32),
        commutator(a31, a32 * a21),
    )


@pytest.mark.parametrize("k", range(1, 9))
def test_counts(k):
    artin = artin_presentation(k)
    mobius = mobius_presentation(k)
    assert len(artin.generators) == comb(k, 2)
    assert len(artin.relators) == 2 * comb(k, 3) + 4 * comb(k, 4)
    assert len(mobius.generators) == k
    assert len(mobius.relators) == comb(k, 2) + 4 * comb(k, 3) + 2 * comb(
        k, 4
    )
    for relator in artin.relators + mobius.relators:
        assert set(exponent_sums(relator).values()) <= {0}


def test_strand_count_errors():
    for factory in (artin_presentation, mobius_presentation, inclusion_hom):
        with pytest.raises(InvalidStrandCountError) as error:
            factory(0)
        assert error.value.k == 0


def test_variants_differ_only_in_last_family():
    theorem = artin_presentation(4, THEOREM)
    proof = artin_presentation(4, PROOF)
    assert theorem.relators[:-1] == proof.relators[:-1]
    assert theorem.relators[-1] != proof.relators[-1]
    assert artin_presentation(3, THEOREM) == artin_presentation(3, PROOF)


def test_b_word():
    assert b_word(3, 1, 3) == word("A_3_2^-1 A_3_1 A_3_2")
    assert b_word(2, 1, 2) == gen("A_2_1")
    assert b_word(4, 1, 4) == word(
        "A_4_3^-1 A_4_2^-1 A_4_1 A_4_2 A_4_3"
    )


@pytest.mark.parametrize("k", range(2, 7))
def test_b_word_exponent_sums(k):
    for name in artin_generators(k):
        _, j, i = name.split("_")
        sums = exponent_sums(b_word(int(j), int(i), k))
        assert {g: s for g, s in sums.items() if s} == {name: 1}


@pytest.mark.parametrize("j, i, k", [(1, 1, 3), (2, 3, 3), (4, 1, 3), (2, 0, 3)])
def test_b_word_index_errors(j, i, k):
    with pytest.raises(InvalidStrandIndexError):
        b_word(j, i, k)


def test_mobius_small():
    p = mobius_presentation(1)
    assert p.generators == ("rho_1",)
    assert p.relators == ()
    p = mobius_presentation(2)
    assert p.generators == ("rho_1", "rho_2")
    rho1, rho2 = gen("rho_1"), gen("rho_2")
    # [rho_1^-1, rho_2^-1] = [rho_2, rho_1]
    expected = commutator(~rho1, ~rho2) * ~commutator(rho2, rho1)
    assert p.relators == (expected,)
    assert p.relators[0] != IDENTITY


def test_mobius_three_strands():
    assert len(mobius_presentation(3).relators) == 7


def test_inclusion_images():
    h = inclusion_hom(2)
    assert h.image("A_2_1") == word("rho_2^-1 rho_1^-1 rho_2 rho_1")
    h = inclusion_hom(4, PROOF)
    assert h.source == artin_presentation(4, PROOF)
    assert h.image("A_4_2") == commutator(gen("rho_4"), gen("rho_2"))


def test_unknown_variant():
    with pytest.raises(ValueError):
        artin_presentation(4, "lemma")  # type: ignore[arg-type]
