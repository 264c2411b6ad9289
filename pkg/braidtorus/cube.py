"""This module contains the index-set calculus of the cube category.

An `IndexSet` is a subset of `[1..n]` with the ambient size `n` kept
explicitly. Cube morphisms `f_i^e` from `p` are the signed index sets of
ambient `p`, and they compose by merging signs along `vee`.

Example:
    from braidtorus.cube import IndexSet, wedge

    j = IndexSet.parse("8:{2,4,6}")
    i = IndexSet.parse("18:{2,3,5,7,9,11,13,17}")

    print(wedge(j, i))
    #> 18:{3,7,11}

"""

import itertools
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from typing_extensions import Self

from braidtorus.errors import (
    AmbientMismatchError,
    InvalidIndexSetError,
    InvalidSignError,
    SourceTargetMismatchError,
)

__all__ = (
    "IndexSet",
    "SignedIndexSet",
    "CubeMorphism",
    "complement",
    "wedge",
    "vee",
    "bracket",
    "merge_signs",
    "compose",
    "index_sets",
    "morphisms",
)

_INDEX_SET_PATTERN = re.compile(r"^\s*(\d+)\s*:\s*\{([^{}]*)\}\s*$")
_SIGNED_PATTERN = re.compile(r"^\s*(.+?\})\s*/\s*\[([^\[\]]*)\]\s*$")
_SIGN_SYMBOLS = {"+": 1, "-": -1, "+1": 1, "-1": -1}


@dataclass(frozen=True, order=True)
class IndexSet:
    """An element of C^n_p: strictly increasing indices inside [1..n]."""

    ambient: int
    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(self.indices))
        if self.ambient < 0:
            raise InvalidIndexSetError(
                self.ambient, self.indices, "negative ambient"
            )
        previous = 0
        for index in self.indices:
            if not isinstance(index, int) or isinstance(index, bool):
                raise InvalidIndexSetError(
                    self.ambient, self.indices, f"{index!r} is not an integer"
                )
            if index <= previous:
                raise InvalidIndexSetError(
                    self.ambient, self.indices, "not strictly increasing"
                )
            previous = index
        if previous > self.ambient:
            raise InvalidIndexSetError(
                self.ambient, self.indices, "index out of range"
            )

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __str__(self) -> str:
        return f"{self.ambient}:{{{','.join(map(str, self.indices))}}}"

    @property
    def cardinality(self) -> int:
        return len(self.indices)

    @classmethod
    def full(cls, ambient: int) -> Self:
        return cls(ambient, tuple(range(1, ambient + 1)))

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse the `n:{i1,i2,...}` text form.

        Args:
            text (str): The literal to parse.

        Raises:
            ValueError: If the text is not an index set literal.

        Returns:
            Self: The parsed index set.
        """
        match = _INDEX_SET_PATTERN.match(text)
        if match is None:
            raise ValueError(f"Not an index set literal: {text!r}")
        body = match.group(2).strip()
        try:
            indices = (
                tuple(int(part) for part in body.split(",")) if body else ()
            )
        except ValueError:
            raise ValueError(f"Not an index set literal: {text!r}")
        return cls(int(match.group(1)), indices)


@dataclass(frozen=True, order=True)
class SignedIndexSet:
    """An index set coloured by a sign vector in {-1, +1}^p."""

    base: IndexSet
    signs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "signs", tuple(self.signs))
        if len(self.signs) != len(self.base) or any(
            sign not in (-1, 1) or isinstance(sign, bool)
            for sign in self.signs
        ):
            raise InvalidSignError(self.signs, len(self.base))

    def __len__(self) -> int:
        return len(self.base)

    def __str__(self) -> str:
        signs = ",".join("+" if sign > 0 else "-" for sign in self.signs)
        return f"{self.base}/[{signs}]"

    @classmethod
    def empty(cls, ambient: int) -> Self:
        return cls(IndexSet(ambient))

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse the `n:{...}/[+,-]` text form."""
        match = _SIGNED_PATTERN.match(text)
        if match is None:
            raise ValueError(f"Not a signed index set literal: {text!r}")
        base = IndexSet.parse(match.group(1))
        body = match.group(2).strip()
        signs = []
        if body:
            for symbol in body.split(","):
                sign = _SIGN_SYMBOLS.get(symbol.strip())
                if sign is None:
                    raise ValueError(
                        f"Not a signed index set literal: {text!r}"
                    )
                signs.append(sign)
        return cls(base, tuple(signs))


@dataclass(frozen=True)
class CubeMorphism:
    """A morphism `f_i^e` of the cube category with source `p`.

    The identity of `p` is the morphism carrying the empty signed set.
    """

    source: int
    data: SignedIndexSet = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.data is None:
            object.__setattr__(self, "data", SignedIndexSet.empty(self.source))
        if self.data.base.ambient != self.source:
            raise AmbientMismatchError(
                "morphism", self.data, self.source, self.source
            )

    @property
    def target(self) -> int:
        return self.source - len(self.data)

    @property
    def is_identity(self) -> bool:
        return len(self.data) == 0

    @property
    def faces(self) -> tuple[tuple[int, int], ...]:
        """The coloured indices `(index, sign)` collapsed by this morphism."""
        return tuple(zip(self.data.base.indices, self.data.signs))

    @classmethod
    def identity(cls, source: int) -> Self:
        return cls(source)

    def __str__(self) -> str:
        return f"f[{self.data}]: {self.source} -> {self.target}"


def complement(i: IndexSet) -> IndexSet:
    """Return the complement of `i` inside its ambient [1..n]."""
    members = set(i.indices)
    return IndexSet(
        i.ambient,
        tuple(x for x in range(1, i.ambient + 1) if x not in members),
    )


def wedge(j: IndexSet, i: IndexSet) -> IndexSet:
    """Select the entries of `i` at the positions listed by `j`.

    Args:
        j (IndexSet): Positions, with ambient equal to the cardinality of `i`.
        i (IndexSet): The indices to select from.

    Raises:
        AmbientMismatchError: If `j.ambient` is not the cardinality of `i`.

    Returns:
        IndexSet: `(i_{j_1}, ..., i_{j_q})` with the ambient of `i`.
    """
    if j.ambient != len(i):
        raise AmbientMismatchError("wedge", j, i, len(i))
    return IndexSet(i.ambient, tuple(i.indices[x - 1] for x in j.indices))


def _check_vee_operands(operation: str, j: IndexSet, i: IndexSet) -> None:
    expected = i.ambient - len(i)
    if j.ambient != expected:
        raise AmbientMismatchError(operation, j, i, expected)


def vee(j: IndexSet, i: IndexSet) -> IndexSet:
    """Return `i + (j wedge complement(i))`, the coloured union.

    Raises:
        AmbientMismatchError: If `j.ambient` differs from `n - |i|`.
    """
    _check_vee_operands("vee", j, i)
    extra = wedge(j, complement(i))
    return IndexSet(i.ambient, tuple(sorted(i.indices + extra.indices)))


def bracket(j: IndexSet, i: IndexSet) -> IndexSet:
    """Return the positions of `i` inside `vee(j, i)`.

    The result `l` is the unique index set of ambient `|i| + |j|` such that
    `wedge(l, vee(j, i)) == i`.

    Raises:
        AmbientMismatchError: If `j.ambient` differs from `n - |i|`.
    """
    _check_vee_operands("bracket", j, i)
    union = vee(j, i)
    members = set(i.indices)
    return IndexSet(
        len(union),
        tuple(
            position
            for position, index in enumerate(union.indices, start=1)
            if index in members
        ),
    )


def merge_signs(i: SignedIndexSet, j: SignedIndexSet) -> SignedIndexSet:
    """Merge the signs of `i` and `j` onto `vee(j.base, i.base)`.

    The positions `bracket(j, i)` receive the signs of `i` in order; the
    remaining positions receive the signs of `j` in order.

    Args:
        i (SignedIndexSet): The first applied (inner) signed set.
        j (SignedIndexSet): The second applied (outer) signed set.

    Raises:
        AmbientMismatchError: If the bases are not compatible for `vee`.

    Returns:
        SignedIndexSet: The signed set `e_{j vee i}`.
    """
    union = vee(j.base, i.base)
    positions = set(bracket(j.base, i.base).indices)
    inner = iter(i.signs)
    outer = iter(j.signs)
    signs = tuple(
        next(inner) if position in positions else next(outer)
        for position in range(1, len(union) + 1)
    )
    return SignedIndexSet(union, signs)


def compose(g: CubeMorphism, f: CubeMorphism) -> CubeMorphism:
    """Return `g o f`.

    Raises:
        SourceTargetMismatchError: If `g.source` differs from `f.target`.
    """
    if g.source != f.target:
        raise SourceTargetMismatchError(g, f)
    return CubeMorphism(f.source, merge_signs(f.data, g.data))


def index_sets(n: int, p: int | None = None) -> Iterator[IndexSet]:
    """Iterate C^n_p in lexicographic order, or every subset when `p` is None."""
    sizes: Sequence[int] = range(n + 1) if p is None else (p,)
    for size in sizes:
        for indices in itertools.combinations(range(1, n + 1), size):
            yield IndexSet(n, indices)


def morphisms(source: int) -> Iterator[CubeMorphism]:
    """Iterate every morphism with the given source, identity first."""
    for base in index_sets(source):
        for signs in itertools.product((1, -1), repeat=len(base)):
            yield CubeMorphism(source, SignedIndexSet(base, signs))
