from collections import Counter
from collections.abc import Sequence

from hypothesis import strategies as st

from braidtorus.cube import IndexSet
from braidtorus.presentations import Presentation
from braidtorus.words import Word, canonical_relator, parse_word


def presentation(generators: str, *relators: str) -> Presentation:
    names = tuple(name.strip() for name in generators.split(",") if name.strip())
    return Presentation(names, tuple(parse_word(r, names) for r in relators))


def word(text: str) -> Word:
    return parse_word(text)


def find_relator_difference(
    left: Presentation, right: Presentation
) -> tuple[list[Word], list[Word]]:
    left_count = Counter(canonical_relator(w) for w in left.relators)
    right_count = Counter(canonical_relator(w) for w in right.relators)
    return (
        sorted((left_count - right_count).elements()),
        sorted((right_count - left_count).elements()),
    )


def letters(generators: Sequence[str]):
    return st.tuples(st.sampled_from(tuple(generators)), st.sampled_from((1, -1)))


def raw_letters(generators: Sequence[str] = ("a", "b", "c"), max_size=30):
    return st.lists(letters(generators), max_size=max_size)


def words(generators: Sequence[str] = ("a", "b", "c"), max_size=30):
    return raw_letters(generators, max_size).map(lambda ls: Word(tuple(ls)))


@st.composite
def index_sets(draw, ambient=None, max_ambient=20):
    n = draw(st.integers(0, max_ambient)) if ambient is None else ambient
    chosen = draw(st.sets(st.integers(1, n), max_size=n)) if n else set()
    return IndexSet(n, tuple(sorted(chosen)))


@st.composite
def vee_pairs(draw, max_ambient=20):
    """Pairs (j, i) with i in C^n_p and j in C^(n-p)_q."""
    i = draw(index_sets(max_ambient=max_ambient))
    j = draw(index_sets(ambient=i.ambient - len(i)))
    return j, i


@st.composite
def vee_triples(draw, max_ambient=20):
    j, i = draw(vee_pairs(max_ambient=max_ambient))
    k = draw(index_sets(ambient=j.ambient - len(j)))
    return k, j, i


@st.composite
def wedge_pairs(draw, max_ambient=20):
    """Pairs (j, i) with i in C^n_p and j in C^p_q."""
    i = draw(index_sets(max_ambient=max_ambient))
    j = draw(index_sets(ambient=len(i)))
    return j, i
