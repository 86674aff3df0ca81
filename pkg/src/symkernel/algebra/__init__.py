from .catalog import (
    base_ring_algebra,
    dual_numbers,
    f4,
    free_rank,
    gaussian_integers,
    monogenic,
    quadratic,
    random_monogenic,
    truncated,
)
from .construct import (
    Tower,
    base_change_algebra,
    base_change_element,
    base_change_triple,
    merge_bases,
    pure_tensor,
    tensor_algebra,
    tower_compose,
)
from .table import (
    AlgebraMap,
    AlgElement,
    MultTableAlgebra,
    alg_mul,
    make_algebra,
    random_element,
)
from .triple import GoodTriple, conjugate_triple, make_triple, mult_matrix, regular_triple

__all__ = [
    "AlgElement",
    "AlgebraMap",
    "GoodTriple",
    "MultTableAlgebra",
    "Tower",
    "alg_mul",
    "base_change_algebra",
    "base_change_element",
    "base_change_triple",
    "base_ring_algebra",
    "conjugate_triple",
    "dual_numbers",
    "f4",
    "free_rank",
    "gaussian_integers",
    "make_algebra",
    "make_triple",
    "merge_bases",
    "monogenic",
    "mult_matrix",
    "pure_tensor",
    "quadratic",
    "random_element",
    "random_monogenic",
    "regular_triple",
    "tensor_algebra",
    "tower_compose",
    "truncated",
]
