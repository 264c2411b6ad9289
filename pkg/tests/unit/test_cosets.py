import pytest

from braidtorus.braids import artin_presentation
from braidtorus.checks.suites import QUATERNION_PRESENTATION
from braidtorus.cosets import Overflow, todd_coxeter
from braidtorus.errors import UnknownGeneratorError
from braidtorus.presentations import Presentation
from tests.utils import presentation, word


def test_cyclic_group():
    assert todd_coxeter(presentation("x", "x^5")) == 5


def test_trivial_group():
    assert todd_coxeter(presentation("x", "x")) == 1
    assert todd_coxeter(Presentation()) == 1


def test_quaternion_group():
    assert todd_coxeter(QUATERNION_PRESENTATION) == 8


@pytest.mark.parametrize(
    "relators, order",
    [
        (("a^3", "b^2", "a b a b"), 6),
        (("a^4", "b^2", "a b a b"), 8),
        (("a^2", "b^2", "a b a^-1 b^-1"), 4),
    ],
)
def test_small_groups(relators, order):
    assert todd_coxeter(presentation("a, b", *relators)) == order


def test_subgroup_index():
    assert todd_coxeter(presentation("x"), [word("x^3")]) == 3
    assert todd_coxeter(presentation("x", "x^6"), [word("x^2")]) == 2
    assert todd_coxeter(QUATERNION_PRESENTATION, [word("x")]) == 2


def test_infinite_index_overflows():
    result = todd_coxeter(presentation("a, b"), max_cosets=50)
    assert result == Overflow(50)
    assert str(result) == "overflow: more than 50 cosets needed"


def test_artin_group_is_infinite():
    result = todd_coxeter(artin_presentation(3), max_cosets=200)
    assert isinstance(result, Overflow)


@pytest.mark.parametrize(
    "generators, relators, order",
    [
        ("x", ("x",), 1),
        ("x", ("x^5",), 5),
    ],
)
def test_table_that_fits_the_cap_closes(generators, relators, order):
    p = presentation(generators, *relators)
    assert todd_coxeter(p, max_cosets=order) == order


def test_cap_below_the_order_overflows():
    assert todd_coxeter(presentation("x", "x^5"), max_cosets=4) == Overflow(4)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        todd_coxeter(presentation("x", "x^2"), max_cosets=0)
    with pytest.raises(UnknownGeneratorError):
        todd_coxeter(presentation("x", "x^2"), [word("y")])
    with pytest.raises(UnknownGeneratorError):
        todd_coxeter(Presentation(), [word("y")])
