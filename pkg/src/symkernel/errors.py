"""
Exception hierarchy shared by every module of the kernel.

Each error carries a machine-readable payload so the command line and the HTTP
surface can report it as JSON without knowing the concrete subclass.
"""

from typing import Any


class SymKernelError(Exception):
    """
    Base class of all kernel errors.

    Attributes
    ----------
    message: str
        Human readable description.

    details: dict
        Structured payload, JSON serializable.
    """

    code = "error"

    def __init__(self, message: str, **details: Any) -> None:

        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:

        return {"error": self.code, "message": self.message, "details": self.details}


class RingMismatchError(SymKernelError):
    code = "ring_mismatch"


class VariableError(SymKernelError):
    code = "variable"


class NotSymmetricError(SymKernelError):
    code = "not_symmetric"

    def __init__(self, transposition: tuple) -> None:

        super().__init__(
            f"polynomial is not invariant under transposition {transposition}",
            transposition=list(transposition),
        )
        self.transposition = transposition


class AlgebraAxiomError(SymKernelError):
    code = "algebra_axiom"

    def __init__(self, axiom: str, indices: tuple) -> None:

        super().__init__(
            f"{axiom} fails at {indices}", axiom=axiom, indices=list(indices)
        )
        self.axiom = axiom
        self.indices = indices


class MembershipError(SymKernelError):
    code = "membership"


class ShapeError(SymKernelError):
    code = "shape"


class NotInvariantError(SymKernelError):
    code = "not_invariant"


class NotInvertibleError(SymKernelError):
    code = "not_invertible"


class ResourceCapError(SymKernelError):
    code = "resource_cap"


class NotSurjectiveError(SymKernelError):
    code = "not_surjective"


class NotUnifibrantError(SymKernelError):
    code = "not_unifibrant"


class NonCommutingSquareError(SymKernelError):
    code = "non_commuting_square"

    def __init__(self, i: int, j: int) -> None:

        super().__init__(f"square at ({i}, {j}) does not commute", i=i, j=j)
        self.position = (i, j)


class NotTransitiveError(SymKernelError):
    code = "not_transitive"


class NegativeCoefficientError(SymKernelError):
    code = "negative_coefficient"


class PartitionError(SymKernelError):
    code = "partition"


class ConfigError(SymKernelError):
    code = "config"


class CodecError(SymKernelError):
    code = "codec"