from pytest import fixture

from braidtorus.finite_groups import FiniteGroupTable, catalog
from braidtorus.presentations import Presentation
from tests.utils import find_relator_difference


@fixture(scope="session")
def groups() -> tuple[FiniteGroupTable, ...]:
    return catalog()


@fixture(scope="session")
def group_by_name(groups) -> dict[str, FiniteGroupTable]:
    return {group.name: group for group in groups}


def pytest_assertrepr_compare(op, left, right):
    if (
        isinstance(left, Presentation)
        and isinstance(right, Presentation)
        and op == "=="
    ):
        result = ["presentation instances:"]
        if left.generators != right.generators:
            result.append(
                f"   generators: {left.generators} != {right.generators}"
            )
        only_left, only_right = find_relator_difference(left, right)
        for w in only_left:
            result.append(f"   only left: {w}")
        for w in only_right:
            result.append(f"   only right: {w}")
        if not only_left and not only_right and left.relators != right.relators:
            result.append("   same relators up to rotation, order or inversion")
        return result
