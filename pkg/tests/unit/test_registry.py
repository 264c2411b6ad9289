import pytest

from braidtorus.checks import (
    CaseLog,
    CheckContext,
    CheckParams,
    CheckRegistry,
    check,
    collect_checks,
    default_registry,
)
from braidtorus.errors import DuplicatedCheckError, UnknownCheckError


class SizeParams(CheckParams):
    size: int = 3


@check("sizes", params=SizeParams)
def sizes(params: SizeParams, context: CheckContext, log: CaseLog) -> None:
    """Sizes are positive.

    Second line of the description.
    """
    for size in range(1, params.size + 1):
        log.expect(f"size {size}", True, size > 0)


@check()
def unnamed(params, context, log) -> None:
    log.expect("one", 1, 1)


def not_a_check():
    pass


def test_collect_checks_from_caller_globals():
    checks = collect_checks()
    assert [c.name for c in checks] == ["sizes", "unnamed"]
    assert checks[0].params_model is SizeParams
    assert checks[0].description == "Sizes are positive."
    assert checks[1].params_model is CheckParams
    assert checks[1].description == ""


def test_collect_checks_from_mapping():
    checks = collect_checks({"a": sizes, "b": not_a_check, "c": 3})
    assert [c.name for c in checks] == ["sizes"]


def test_duplicated_check():
    registry = CheckRegistry(collect_checks())
    with pytest.raises(DuplicatedCheckError) as error:
        registry.register_checks(collect_checks())
    assert error.value.to_add.name == "sizes"


def test_unknown_check():
    registry = CheckRegistry(collect_checks())
    with pytest.raises(UnknownCheckError) as error:
        registry.get("nope")
    assert error.value.available == ("sizes", "unnamed")
    assert "nope" in str(error.value)


def test_registry_protocol():
    registry = CheckRegistry(collect_checks())
    assert len(registry) == 2
    assert "sizes" in registry
    assert "nope" not in registry
    assert [c.name for c in registry] == list(registry.names())


def test_default_registry_order():
    assert default_registry().names() == (
        "cube_identities",
        "category_laws",
        "artin_counts",
        "mobius_counts",
        "abelianizations",
        "pipeline_equivalence",
        "inclusion_consistency",
        "quaternion_selftest",
    )
    assert default_registry() is default_registry()


def test_params_reject_unknown_keys():
    with pytest.raises(ValueError):
        SizeParams.model_validate({"size": 1, "other": 2})
