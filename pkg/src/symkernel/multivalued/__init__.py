from .groups import GroupObject, cyclic, group_catalog, klein, transfer
from .laws import (
    LAWS,
    Law,
    LawMode,
    LawReport,
    check_correspondence,
    check_degrees,
    check_law,
    check_linear_extension,
    check_transfer,
    generators,
    morphisms,
    multisets,
    random_morphism,
    verify_category_laws,
)
from .objects import FinSet, MultiMorphism, Multiset, restrict
from .ops import (
    HomDecomposition,
    LinearMorphism,
    compose_linear,
    corr_to_mv,
    decompose_hom,
    degree,
    graph,
    homogeneous_degree,
    homogeneous_parts,
    identity,
    is_homogeneous,
    linearize,
    mv_add,
    mv_compose,
    mv_tensor,
    mv_to_corr,
    relabel,
    zero,
)

__all__ = [
    "LAWS",
    "FinSet",
    "GroupObject",
    "HomDecomposition",
    "Law",
    "LawMode",
    "LawReport",
    "LinearMorphism",
    "MultiMorphism",
    "Multiset",
    "check_correspondence",
    "check_degrees",
    "check_law",
    "check_linear_extension",
    "check_transfer",
    "compose_linear",
    "corr_to_mv",
    "cyclic",
    "decompose_hom",
    "degree",
    "generators",
    "graph",
    "group_catalog",
    "homogeneous_degree",
    "homogeneous_parts",
    "identity",
    "is_homogeneous",
    "klein",
    "linearize",
    "morphisms",
    "multisets",
    "mv_add",
    "mv_compose",
    "mv_tensor",
    "mv_to_corr",
    "random_morphism",
    "relabel",
    "restrict",
    "transfer",
    "verify_category_laws",
    "zero",
]
