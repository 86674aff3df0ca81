"""
Dense matrices of Scalars and division-free determinant machinery.

Matrices are plain lists of rows. Heavy lifting over a single BaseRing goes
through sympy's DomainMatrix (Berkowitz characteristic polynomial, nullspace,
rank); `berkowitz` is the same algorithm for entries of any commutative ring
that only supports +, - and *, such as algebra elements.
"""

from typing import Callable, List, Sequence, TypeVar

from sympy.polys.matrices import DomainMatrix

from ..errors import NotInvertibleError, ShapeError
from .base import BaseRing, Scalar, unit_inverse

Matrix = List[List[Scalar]]
T = TypeVar("T")


def shape(M: Sequence[Sequence]) -> tuple:

    return (len(M), len(M[0]) if M else 0)


def identity(ring: BaseRing, n: int) -> Matrix:

    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def zeros(ring: BaseRing, rows: int, cols: int) -> Matrix:

    return [[ring.zero for _ in range(cols)] for _ in range(rows)]


def matmul(A: Matrix, B: Matrix, ring: BaseRing) -> Matrix:

    if shape(A)[1] != len(B):
        raise ShapeError(f"cannot multiply {shape(A)} by {shape(B)}")
    cols = shape(B)[1]
    result = zeros(ring, len(A), cols)
    for i, row in enumerate(A):
        for k, a in enumerate(row):
            if a.is_zero():
                continue
            for j in range(cols):
                result[i][j] = result[i][j] + a * B[k][j]
    return result


def matadd(A: Matrix, B: Matrix) -> Matrix:

    if shape(A) != shape(B):
        raise ShapeError(f"cannot add {shape(A)} and {shape(B)}")
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(c: Scalar, A: Matrix) -> Matrix:

    return [[c * a for a in row] for row in A]


def transpose(A: Matrix) -> Matrix:

    return [list(col) for col in zip(*A)]


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; row (i, k) sits at index i * rows(B) + k."""

    p, q = shape(B)
    return [
        [A[i // p][j // q] * B[i % p][j % q] for j in range(shape(A)[1] * q)]
        for i in range(len(A) * p)
    ]


def to_domain_matrix(M: Matrix, ring: BaseRing) -> DomainMatrix:

    rows, cols = shape(M)
    return DomainMatrix([[ring(a).value for a in row] for row in M], (rows, cols), ring.domain)


def from_domain_matrix(dm: DomainMatrix, ring: BaseRing) -> Matrix:

    return [[ring.element(ring.domain.convert(a)) for a in row] for row in dm.to_list()]


def char_coefficients(M: Matrix, ring: BaseRing) -> List[Scalar]:
    """
    Coefficients chi_0 = 1, chi_1, ..., chi_n of det(t + M) in decreasing
    powers of t, computed division-free with the Berkowitz algorithm.
    """
    n = len(M)
    if n == 0:
        return [ring.one]
    dm = to_domain_matrix(M, ring)
    coeffs = (-dm).to_dense().charpoly_berk()
    return [ring.element(c) for c in coeffs]


def det(M: Matrix, ring: BaseRing) -> Scalar:

    return char_coefficients(M, ring)[-1]


def adjugate(M: Matrix, ring: BaseRing) -> Matrix:

    if not M:
        return []
    return from_domain_matrix(to_domain_matrix(M, ring).adjugate(), ring)


def inverse(M: Matrix, ring: BaseRing) -> Matrix:
    """Inverse of a matrix whose determinant is a unit of the ring."""

    d = det(M, ring)
    try:
        d_inv = unit_inverse(d)
    except NotInvertibleError:
        raise NotInvertibleError(f"determinant {d} is not a unit", determinant=str(d))
    return scale(d_inv, adjugate(M, ring))


def rank(M: Matrix, ring: BaseRing) -> int:
    """Rank over the fraction field of the ring."""

    rows, cols = shape(M)
    if rows == 0 or cols == 0:
        return 0
    return to_domain_matrix(M, ring).to_field().rank()


def nullspace(M: Matrix, ring: BaseRing) -> Matrix:
    """Basis of the right kernel of M over a field, as a list of vectors."""

    rows, cols = shape(M)
    if cols == 0:
        return []
    if rows == 0:
        return [[ring.one if i == j else ring.zero for i in range(cols)] for j in range(cols)]
    basis = to_domain_matrix(M, ring).nullspace().to_list()
    return [[ring.element(a) for a in row] for row in basis]


def berkowitz(M: Sequence[Sequence[T]], one: T) -> List[T]:
    """
    Coefficients of det(t - M), leading coefficient first, for a square
    matrix with entries in any commutative ring.

    Params
    ------
    M: square matrix of ring elements supporting +, - and *

    one: the unit of that ring

    Returns
    -------
    list
        n + 1 coefficients, computed with Toeplitz products only.
    """
    n = len(M)
    zero = one - one
    if n == 0:
        return [one]

    vector = [one, -M[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        a = M[k][k]
        R = M[k][k + 1 :]
        C = [M[i][k] for i in range(k + 1, n)]
        A = [row[k + 1 :] for row in M[k + 1 :]]

        # -R A^j C for j = 0 .. size-1
        diags = [one, -a]
        column = C
        for _ in range(len(C)):
            diags.append(-_dot(R, column, zero))
            column = [_dot(row, column, zero) for row in A]

        vector = [
            _dot([diags[i - j] for j in range(min(i + 1, len(vector)))], vector, zero)
            for i in range(len(vector) + 1)
        ]
    return vector


def generic_det(M: Sequence[Sequence[T]], one: T) -> T:

    coeffs = berkowitz(M, one)
    return coeffs[-1] if len(M) % 2 == 0 else -coeffs[-1]


def _dot(xs: Sequence[T], ys: Sequence[T], zero: T) -> T:

    total = zero
    for x, y in zip(xs, ys):
        total = total + x * y
    return total


def map_matrix(f: Callable, M: Matrix) -> Matrix:

    return [[f(a) for a in row] for row in M]
