from .checks import (
    check_equivalence,
    check_euler,
    check_full_exactness,
    check_homotopies,
    check_reorderings,
    check_total_complexes,
    random_cover,
    random_double_complex,
)
from .complex import ChainComplex, ChainMap, DoubleComplex, HomologyGroup, total_complex
from .cover import (
    Cover,
    HomotopyWitness,
    Piece,
    cech_complex,
    enumerate_covers,
    euler_char,
    full_cech,
    homotopy_witness,
    is_finitistic,
    is_unifibrant,
    point_complex,
    reduced_cech,
    reorder_iso,
    unifibrant_witnesses,
)
from .smith import SmithDecomposition, invariant_factors, rank_over, smith
from .transitive import (
    GroupAction,
    TransitiveKernel,
    check_transitive_kernels,
    difference_matrix,
    transitive_actions,
    transitive_kernel,
)

__all__ = [
    "ChainComplex",
    "ChainMap",
    "Cover",
    "DoubleComplex",
    "GroupAction",
    "HomologyGroup",
    "HomotopyWitness",
    "Piece",
    "SmithDecomposition",
    "TransitiveKernel",
    "cech_complex",
    "check_equivalence",
    "check_euler",
    "check_full_exactness",
    "check_homotopies",
    "check_reorderings",
    "check_total_complexes",
    "check_transitive_kernels",
    "difference_matrix",
    "enumerate_covers",
    "euler_char",
    "full_cech",
    "homotopy_witness",
    "invariant_factors",
    "is_finitistic",
    "is_unifibrant",
    "point_complex",
    "rank_over",
    "random_cover",
    "random_double_complex",
    "reduced_cech",
    "reorder_iso",
    "smith",
    "total_complex",
    "transitive_actions",
    "transitive_kernel",
    "unifibrant_witnesses",
]
