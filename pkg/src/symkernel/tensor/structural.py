"""
The structural maps

    sigma_(n_1, ..., n_r): S_(n_1 + ... + n_r)(B|A) -> S_n_1(B|A) (x) ... (x) S_n_r(B|A)
    tau_(m, n): S_mn(B|A) -> S_m(S_n(B|A)|A)

Both reread an S_N-invariant as an invariant of a smaller group (the product
of symmetric groups on consecutive blocks, resp. the wreath product on the
columns x, x + m, ..., x + m(n - 1)) and write it in the matching basis.
"""

import itertools
import logging
from typing import Dict, Iterator, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from ..algebra import MultTableAlgebra
from ..errors import NotInvariantError, ShapeError
from ..rings import Scalar
from .element import SymTensor, TensorElement, is_invariant, tensor_mul
from .perm import wreath_generators

logger = logging.getLogger(__name__)

Counts = Tuple[Tuple[int, int], ...]


def _counts(key: Sequence[int]) -> Counts:

    counts: Dict[int, int] = {}
    for i in key:
        counts[i] = counts.get(i, 0) + 1
    return tuple(sorted(counts.items()))


def _expand(counts: Counts) -> Tuple[int, ...]:

    return tuple(i for i, c in counts for _ in range(c))


def _sub_multisets(counts: Counts, size: int) -> Iterator[Tuple[Counts, Counts]]:
    """Every sub-multiset of the given size with its complement."""

    if size == 0:
        yield (), counts
        return
    if not counts:
        return
    (i, c), rest = counts[0], counts[1:]
    for take in range(min(c, size), -1, -1):
        for chosen, left in _sub_multisets(rest, size - take):
            head = ((i, take),) if take else ()
            tail = ((i, c - take),) if c - take else ()
            yield head + chosen, tail + left


def _ordered_splits(key: Sequence[int], sizes: Sequence[int]) -> Iterator[Tuple[tuple, ...]]:

    if not sizes:
        if not key:
            yield ()
        return
    for chosen, left in _sub_multisets(_counts(key), sizes[0]):
        for rest in _ordered_splits(_expand(left), sizes[1:]):
            yield (_expand(chosen),) + rest


def _block_partitions(key: Sequence[int], m: int, n: int) -> Iterator[Tuple[tuple, ...]]:
    """Unordered partitions of a multiset of size mn into m blocks of size n, blocks sorted."""

    def walk(counts: Counts, blocks: int, floor: tuple):

        if blocks == 0:
            if not counts:
                yield ()
            return
        for chosen, left in _sub_multisets(counts, n):
            block = _expand(chosen)
            if block < floor:
                continue
            for rest in walk(left, blocks - 1, block):
                yield (block,) + rest

    yield from walk(_counts(key), m, ())


class SplitTensor:
    """
    An element of S_n1(B|A) (x) ... (x) S_nr(B|A) in the product of orbit
    bases.

    Attributes
    ----------
    algebra: MultTableAlgebra

    sizes: tuple<int>

    coeffs: dict<tuple<tuple<int>>, Scalar>
        Coefficient of O(r_1) (x) ... (x) O(r_r), keyed by sorted representatives.
    """

    def __init__(
        self, algebra: MultTableAlgebra, sizes: Sequence[int], coeffs: Dict[tuple, Scalar] = None
    ) -> None:

        self.algebra = algebra
        self.sizes = tuple(sizes)
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def from_factors(cls, factors: Sequence[SymTensor]) -> "SplitTensor":

        if not factors:
            raise ShapeError("at least one factor is needed")
        algebra = factors[0].algebra
        coeffs: Dict[tuple, Scalar] = {}
        for choice in itertools.product(*(f.coeffs.items() for f in factors)):
            key = tuple(k for k, _ in choice)
            c = algebra.base.one
            for _, a in choice:
                c = c * a
            coeffs[key] = c
        return cls(algebra, [f.n for f in factors], coeffs)

    def __add__(self, other: "SplitTensor") -> "SplitTensor":

        if other.sizes != self.sizes or other.algebra != self.algebra:
            raise ShapeError("split tensors of different shapes")
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs[k] + c if k in coeffs else c
        return SplitTensor(self.algebra, self.sizes, coeffs)

    def __neg__(self) -> "SplitTensor":

        return SplitTensor(self.algebra, self.sizes, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "SplitTensor") -> "SplitTensor":

        return self + (-other)

    def __mul__(self, other: "SplitTensor") -> "SplitTensor":
        """Factorwise product of the symmetric tensor factors."""

        if other.sizes != self.sizes or other.algebra != self.algebra:
            raise ShapeError("split tensors of different shapes")
        one = self.algebra.base.one
        products: Dict[Tuple[int, tuple, tuple], SymTensor] = {}

        def factor_product(j: int, r: tuple, s: tuple) -> SymTensor:

            if (j, r, s) not in products:
                left = SymTensor(self.algebra, self.sizes[j], {r: one})
                right = SymTensor(self.algebra, self.sizes[j], {s: one})
                products[(j, r, s)] = left * right
            return products[(j, r, s)]

        coeffs: Dict[tuple, Scalar] = {}
        for key, a in self.coeffs.items():
            for key2, b in other.coeffs.items():
                parts = [
                    factor_product(j, r, s).coeffs.items()
                    for j, (r, s) in enumerate(zip(key, key2))
                ]
                for choice in itertools.product(*parts):
                    c = a * b
                    for _, x in choice:
                        c = c * x
                    new_key = tuple(k for k, _ in choice)
                    coeffs[new_key] = coeffs[new_key] + c if new_key in coeffs else c
        return SplitTensor(self.algebra, self.sizes, coeffs)

    def to_tensor(self) -> TensorElement:
        """The element of (B|A)^(x)(n1 + ... + nr), blocks side by side."""

        terms: Dict[tuple, Scalar] = {}
        for key, c in self.coeffs.items():
            orbits = [[tuple(u) for u in multiset_permutations(list(r))] for r in key]
            for parts in itertools.product(*orbits):
                terms[tuple(itertools.chain.from_iterable(parts))] = c
        return TensorElement(self.algebra, sum(self.sizes), terms)

    def __eq__(self, other) -> bool:

        if not isinstance(other, SplitTensor):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.sizes == other.sizes
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:

        return f"SplitTensor(sizes={self.sizes}, terms={len(self.coeffs)})"


def _require_symmetric(t: SymTensor) -> SymTensor:

    if t.generators is None:
        return t
    tensor = t.to_tensor()
    if not is_invariant(tensor):
        raise NotInvariantError("tensor is not invariant under the full symmetric group")
    return SymTensor.from_tensor(tensor)


def sigma_map(t: SymTensor, sizes: Sequence[int]) -> SplitTensor:
    """
    sigma_(n_1, ..., n_r)(t): each orbit of S_N splits into the orbits of
    S_n1 x ... x S_nr, one per ordered split of the multiset into blocks.
    """
    t = _require_symmetric(t)
    sizes = tuple(sizes)
    if sum(sizes) != t.n:
        raise ShapeError(f"sizes {list(sizes)} do not add up to {t.n}")
    coeffs: Dict[tuple, Scalar] = {}
    for key, c in t.coeffs.items():
        for split in _ordered_splits(key, sizes):
            coeffs[split] = c
    logger.debug("sigma%s: %d orbits -> %d terms", sizes, len(t.coeffs), len(coeffs))
    return SplitTensor(t.algebra, sizes, coeffs)


class NestedSymTensor:
    """
    An element of S_m(S_n(B|A)|A) in the basis of orbit sums of S_m on
    m-tuples of S_n-orbit sums.

    Attributes
    ----------
    algebra: MultTableAlgebra

    m: int

    n: int

    coeffs: dict<tuple<tuple<int>>, Scalar>
        Keyed by the sorted m-tuple of sorted n-tuples (the inner orbits).
    """

    def __init__(
        self, algebra: MultTableAlgebra, m: int, n: int, coeffs: Dict[tuple, Scalar] = None
    ) -> None:

        self.algebra = algebra
        self.m = m
        self.n = n
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero()}

    def to_tensor(self) -> TensorElement:
        """The wreath-invariant element of (B|A)^(x)mn; block x fills slots x + m * y."""

        m, n = self.m, self.n
        terms: Dict[tuple, Scalar] = {}
        for key, c in self.coeffs.items():
            for arrangement in multiset_permutations(list(key)):
                columns = [[tuple(u) for u in multiset_permutations(list(b))] for b in arrangement]
                for choice in itertools.product(*columns):
                    u = [0] * (m * n)
                    for x, column in enumerate(choice):
                        for y, i in enumerate(column):
                            u[x + m * y] = i
                    terms[tuple(u)] = c
        return TensorElement(self.algebra, m * n, terms)

    @classmethod
    def read(cls, t: TensorElement, m: int, n: int) -> "NestedSymTensor":
        """Coordinates of a wreath-invariant tensor; NotInvariantError otherwise."""

        if t.n != m * n:
            raise ShapeError(f"tensor of power {t.n} read as {m} x {n}")
        if not is_invariant(t, wreath_generators(m, n)):
            raise NotInvariantError("tensor is not invariant under the wreath product")
        coeffs: Dict[tuple, Scalar] = {}
        for u, c in t.terms.items():
            blocks = tuple(
                sorted(tuple(sorted(u[x + m * y] for y in range(n))) for x in range(m))
            )
            coeffs.setdefault(blocks, c)
        return cls(t.algebra, m, n, coeffs)

    @classmethod
    def from_outer(cls, s: SymTensor, m: int) -> "NestedSymTensor":
        """s^(x)m for s in S_n(B|A), as an element of S_m(S_n(B|A)|A)."""

        t = s.to_tensor()
        power = TensorElement(s.algebra, 0, {(): s.algebra.base.one})
        for _ in range(m):
            power = _concat(power, t)
        interleaved = TensorElement(
            s.algebra,
            m * s.n,
            {_columns_to_grid(u, m, s.n): c for u, c in power.terms.items()},
        )
        return cls.read(interleaved, m, s.n)

    def __add__(self, other: "NestedSymTensor") -> "NestedSymTensor":

        self.__check(other)
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs[k] + c if k in coeffs else c
        return NestedSymTensor(self.algebra, self.m, self.n, coeffs)

    def __mul__(self, other: "NestedSymTensor") -> "NestedSymTensor":

        self.__check(other)
        product = tensor_mul(self.to_tensor(), other.to_tensor())
        return NestedSymTensor.read(product, self.m, self.n)

    def __check(self, other: "NestedSymTensor") -> None:

        if (other.m, other.n) != (self.m, self.n) or other.algebra != self.algebra:
            raise ShapeError("nested tensors of different shapes")

    def __eq__(self, other) -> bool:

        if not isinstance(other, NestedSymTensor):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and (self.m, self.n) == (other.m, other.n)
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:

        return f"NestedSymTensor(m={self.m}, n={self.n}, terms={len(self.coeffs)})"


def _concat(s: TensorElement, t: TensorElement) -> TensorElement:

    terms: Dict[tuple, Scalar] = {}
    for u, a in s.terms.items():
        for v, b in t.terms.items():
            terms[u + v] = a * b
    return TensorElement(s.algebra, s.n + t.n, terms)


def _columns_to_grid(u: tuple, m: int, n: int) -> tuple:
    """Column-major blocks (block x holds u[x*n:(x+1)*n]) to grid slots x + m * y."""

    grid = [0] * (m * n)
    for x in range(m):
        for y in range(n):
            grid[x + m * y] = u[x * n + y]
    return tuple(grid)


def tau_map(t: SymTensor, m: int, n: int) -> NestedSymTensor:
    """
    tau_(m, n)(t): each orbit of S_mn splits into wreath orbits, one per
    unordered partition of the multiset into m blocks of size n.
    """
    t = _require_symmetric(t)
    if m * n != t.n:
        raise ShapeError(f"{m} x {n} does not match power {t.n}")
    coeffs: Dict[tuple, Scalar] = {}
    for key, c in t.coeffs.items():
        for blocks in _block_partitions(key, m, n):
            coeffs[blocks] = c
    logger.debug("tau(%d,%d): %d orbits -> %d terms", m, n, len(t.coeffs), len(coeffs))
    return NestedSymTensor(t.algebra, m, n, coeffs)
