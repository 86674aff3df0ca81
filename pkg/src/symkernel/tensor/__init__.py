from .closure import Subalgebra, generated_subalgebra
from .element import (
    SymTensor,
    TensorElement,
    TypeVector,
    conjugate,
    elem_sym,
    invariant_basis,
    is_invariant,
    is_partition_basis,
    permute,
    pure,
    random_invariant,
    tensor_mul,
    tensor_power_map,
    typed_sym,
)
from .elementary import (
    ElementaryExpr,
    ElementaryRewriter,
    evaluate_elementary,
    express_in_elementary,
    symbol_name,
    typed_expand,
    typed_term,
)
from .perm import EmbeddingKind, GroupEmbedding, embed, wreath_generators
from .structural import NestedSymTensor, SplitTensor, sigma_map, tau_map

__all__ = [
    "ElementaryExpr",
    "ElementaryRewriter",
    "EmbeddingKind",
    "GroupEmbedding",
    "NestedSymTensor",
    "SplitTensor",
    "Subalgebra",
    "SymTensor",
    "TensorElement",
    "TypeVector",
    "conjugate",
    "elem_sym",
    "embed",
    "evaluate_elementary",
    "express_in_elementary",
    "generated_subalgebra",
    "invariant_basis",
    "is_invariant",
    "is_partition_basis",
    "permute",
    "pure",
    "random_invariant",
    "sigma_map",
    "symbol_name",
    "tau_map",
    "tensor_mul",
    "tensor_power_map",
    "typed_expand",
    "typed_sym",
    "typed_term",
    "wreath_generators",
]
