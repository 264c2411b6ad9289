import pytest
from hypothesis import given, settings

from braidtorus.errors import (
    InvalidLetterError,
    UnknownGeneratorError,
    WordSyntaxError,
)
from braidtorus.words import (
    IDENTITY,
    Word,
    canonical_relator,
    commutator,
    conjugate,
    cyclically_reduce,
    exponent_sums,
    gen,
    inv,
    mul,
    parse_word,
    reduce,
)
from tests.utils import raw_letters, words

a, b, c = gen("a"), gen("b"), gen("c")


def test_reduce_cancels_adjacent_pairs():
    assert reduce([("a", 1), ("a", -1)]) == IDENTITY
    assert reduce([("a", 1), ("b", 1), ("b", -1), ("a", 1)]) == a**2


def test_reduce_checks_generators():
    with pytest.raises(UnknownGeneratorError) as error:
        reduce([("a", 1), ("z", -1)], ("a", "b"))
    assert error.value.name == "z"


@pytest.mark.parametrize(
    "letter", [("a", 2), ("a", 0), ("a", True), ("", 1), ("a b", 1), "a"]
)
def test_invalid_letters(letter):
    with pytest.raises(InvalidLetterError):
        Word((letter,))


def test_commutator_convention():
    assert commutator(a, b) == Word((("a", -1), ("b", -1), ("a", 1), ("b", 1)))
    assert commutator(a, a) == IDENTITY


def test_conjugate():
    assert conjugate(a, b) == mul(~b, a, b)
    assert conjugate(a, IDENTITY) == a


def test_power_and_inverse():
    assert (a * b) ** -2 == mul(~b, ~a, ~b, ~a)
    assert a**0 == IDENTITY
    assert inv(a * b) == ~b * ~a


def test_text_form():
    assert str(IDENTITY) == "1"
    assert str(mul(gen("A_2_1"), ~gen("A_3_1"))) == "A_2_1 A_3_1^-1"


def test_parse_word():
    assert parse_word("1") == IDENTITY
    assert parse_word("a b^-1 a^2") == mul(a, ~b, a, a)
    assert parse_word("a a^-1 b") == b
    with pytest.raises(WordSyntaxError):
        parse_word("a*b")
    with pytest.raises(WordSyntaxError):
        parse_word("   ")
    with pytest.raises(UnknownGeneratorError):
        parse_word("a c", ("a", "b"))


def test_exponent_sums():
    assert exponent_sums(parse_word("a b a^-1 a^-1 c")) == {
        "a": -1,
        "b": 1,
        "c": 1,
    }


def test_cyclically_reduce():
    assert cyclically_reduce(parse_word("a b c b^-1 a^-1")) == c
    assert cyclically_reduce(parse_word("a b a^-1")) == b
    assert cyclically_reduce(IDENTITY) == IDENTITY


def test_canonical_relator_ignores_rotation_and_inversion():
    w = parse_word("a b a^-1 c")
    rotated = parse_word("c a b a^-1")
    inverted = w.inverse()
    conjugated = parse_word("b a b a^-1 c b^-1")
    assert canonical_relator(w) == canonical_relator(rotated)
    assert canonical_relator(w) == canonical_relator(inverted)
    assert canonical_relator(w) == canonical_relator(conjugated)
    assert canonical_relator(w) != canonical_relator(parse_word("a b c a^-1"))


@settings(max_examples=500)
@given(raw_letters())
def test_reduce_is_idempotent(letters):
    once = reduce(letters)
    assert reduce(once.letters) == once
    assert all(
        not (x[0] == y[0] and x[1] == -y[1])
        for x, y in zip(once.letters, once.letters[1:])
    )


@settings(max_examples=300)
@given(words(), words(), words())
def test_group_axioms(u, v, w):
    assert mul(u, inv(u)) == IDENTITY
    assert mul(mul(u, v), w) == mul(u, mul(v, w))
    assert inv(mul(u, v)) == mul(inv(v), inv(u))
    assert inv(inv(u)) == u


@settings(max_examples=300)
@given(words(), words())
def test_commutator_has_zero_exponent_sums(u, v):
    assert all(total == 0 for total in exponent_sums(commutator(u, v)).values())


@settings(max_examples=300)
@given(words())
def test_plain_text_round_trip(w):
    assert parse_word(str(w)) == w
