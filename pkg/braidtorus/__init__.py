"""Braidtorus, cube-category combinatorics and pure braid group presentations of embedding tori."""

__version__ = "0.1.0"


from .abelian import AbelianInvariants, abelianization
from .braids import (
    artin_presentation,
    b_word,
    inclusion_hom,
    mobius_presentation,
)
from .cosets import Overflow, todd_coxeter
from .cube import (
    CubeMorphism,
    IndexSet,
    SignedIndexSet,
    bracket,
    complement,
    compose,
    merge_signs,
    vee,
    wedge,
)
from .finite_groups import FiniteGroupTable, catalog, hom_count
from .formats import read_presentation, write_presentation
from .mobius import (
    mobius_edge_images,
    mobius_pipeline,
    mobius_stage1,
    mobius_two_cell_relators,
)
from .presentations import (
    GroupHom,
    Presentation,
    apply_hom,
    substitute_generators,
)
from .van_kampen import MappingTorusInput, attach_relators, vk_mapping_torus
from .words import Word, commutator, conjugate, gen, inv, mul, reduce

__all__ = [
    "AbelianInvariants",
    "abelianization",
    "artin_presentation",
    "b_word",
    "inclusion_hom",
    "mobius_presentation",
    "Overflow",
    "todd_coxeter",
    "CubeMorphism",
    "IndexSet",
    "SignedIndexSet",
    "bracket",
    "complement",
    "compose",
    "merge_signs",
    "vee",
    "wedge",
    "FiniteGroupTable",
    "catalog",
    "hom_count",
    "read_presentation",
    "write_presentation",
    "mobius_edge_images",
    "mobius_pipeline",
    "mobius_stage1",
    "mobius_two_cell_relators",
    "GroupHom",
    "Presentation",
    "apply_hom",
    "substitute_generators",
    "MappingTorusInput",
    "attach_relators",
    "vk_mapping_torus",
    "Word",
    "commutator",
    "conjugate",
    "gen",
    "inv",
    "mul",
    "reduce",
]
