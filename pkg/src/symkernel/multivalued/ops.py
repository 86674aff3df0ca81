"""
Sum, composition and tensor product of multivalued morphisms, their
Lambda-linear extensions and the identification with effective
correspondences over a point.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import NegativeCoefficientError, PartitionError, ShapeError
from ..rings import ZZ, BaseRing, RingKind, Scalar
from .objects import FinSet, Label, MultiMorphism, Multiset, restrict

logger = logging.getLogger(__name__)


def mv_add(alpha: MultiMorphism, beta: MultiMorphism) -> MultiMorphism:
    """Pointwise multiset union."""

    if alpha.source != beta.source or alpha.target != beta.target:
        raise ShapeError("summands must share source and target")
    return MultiMorphism(
        alpha.source, alpha.target, {x: alpha(x) + beta(x) for x in alpha.source}
    )


def mv_compose(beta: MultiMorphism, alpha: MultiMorphism) -> MultiMorphism:
    """
    beta o alpha: x goes to the sum of beta(y) over y in alpha(x), counted with
    multiplicity.
    """
    if alpha.target != beta.source:
        raise ShapeError(
            "target of the first morphism is not the source of the second",
            first=repr(alpha.target),
            second=repr(beta.source),
        )
    assign = {}
    for x in alpha.source:
        total = Counter()
        for y, c in alpha(x).items:
            for z, d in beta(y).items:
                total[z] += c * d
        assign[x] = Multiset(beta.target, total)
    return MultiMorphism(alpha.source, beta.target, assign)


def mv_tensor(first: MultiMorphism, second: MultiMorphism) -> MultiMorphism:
    """(x1, x2) goes to the pairwise product multiset; counts multiply."""

    source = first.source.product(second.source)
    target = first.target.product(second.target)
    assign = {}
    for x1, x2 in source:
        counts = {
            (y1, y2): c1 * c2 for y1, c1 in first(x1).items for y2, c2 in second(x2).items
        }
        assign[(x1, x2)] = Multiset(target, counts)
    return MultiMorphism(source, target, assign)


def degree(alpha: MultiMorphism) -> Dict[Label, int]:

    return {x: alpha.degree_at(x) for x in alpha.source}


def is_homogeneous(alpha: MultiMorphism, d: Optional[int] = None) -> bool:
    """All degrees equal (to d when given). Morphisms out of the empty set qualify."""

    degrees = set(degree(alpha).values())
    if d is not None:
        return degrees <= {d}
    return len(degrees) <= 1


def homogeneous_degree(alpha: MultiMorphism) -> Optional[int]:

    degrees = set(degree(alpha).values())
    return degrees.pop() if len(degrees) == 1 else None


def homogeneous_parts(alpha: MultiMorphism) -> Dict[int, MultiMorphism]:
    """
    Split the source into the fibres of the degree function; the restriction of
    alpha to each fibre is homogeneous. On a one-point source there is exactly
    one part.
    """
    fibres: Dict[int, List[Label]] = {}
    for x in alpha.source:
        fibres.setdefault(alpha.degree_at(x), []).append(x)
    return {d: restrict(alpha, xs) for d, xs in sorted(fibres.items())}


def identity(X: FinSet) -> MultiMorphism:

    return MultiMorphism(X, X, {x: Multiset(X, {x: 1}) for x in X})


def zero(X: FinSet, Y: FinSet) -> MultiMorphism:

    return MultiMorphism(X, Y)


def graph(f: Mapping[Label, Label], X: FinSet, Y: FinSet) -> MultiMorphism:
    """The degree-1 morphism x -> {f(x)} of a map of sets."""

    return MultiMorphism(X, Y, {x: Multiset(Y, {f[x]: 1}) for x in X})


def relabel(
    alpha: MultiMorphism,
    source: FinSet,
    target: FinSet,
    on_source: Callable[[Label], Label],
    on_target: Callable[[Label], Label],
) -> MultiMorphism:
    """
    Transport alpha along bijections of its source and target.

    Params
    ------
    on_source: Callable
        Maps a label of the new source to the matching label of alpha.source.

    on_target: Callable
        Maps a label of alpha.target to the matching label of the new target.
    """

    assign = {}
    for x in source:
        assign[x] = Multiset(target, {on_target(y): c for y, c in alpha(on_source(x)).items})
    return MultiMorphism(source, target, assign)


class LinearMorphism:
    """
    Element of Multi(X, Y) (x) Lambda: a finitely supported matrix of
    coefficients indexed by (x, y).

    Attributes
    ----------
    source: FinSet

    target: FinSet

    ring: BaseRing
        The coefficient ring Lambda.

    matrix: dict<(x, y), Scalar>
        Nonzero entries only.
    """

    def __init__(
        self, source: FinSet, target: FinSet, ring: BaseRing, matrix: Mapping = None
    ) -> None:

        self.source = source
        self.target = target
        self.ring = ring
        self.matrix: Dict[Tuple[Label, Label], Scalar] = {}
        for (x, y), value in (matrix or {}).items():
            source.index(x)
            target.index(y)
            value = ring(value)
            if not value.is_zero():
                self.matrix[(x, y)] = value

    def entry(self, x: Label, y: Label) -> Scalar:

        return self.matrix.get((x, y), self.ring.zero)

    def __check(self, other: "LinearMorphism") -> None:

        if self.ring != other.ring:
            raise ShapeError("coefficient rings differ")

    def __add__(self, other: "LinearMorphism") -> "LinearMorphism":

        self.__check(other)
        if (self.source, self.target) != (other.source, other.target):
            raise ShapeError("summands must share source and target")
        total = dict(self.matrix)
        for key, value in other.matrix.items():
            total[key] = total[key] + value if key in total else value
        return LinearMorphism(self.source, self.target, self.ring, total)

    def then(self, other: "LinearMorphism") -> "LinearMorphism":
        """other o self, i.e. (x, z) -> sum_y self(x, y) other(y, z)."""

        self.__check(other)
        if self.target != other.source:
            raise ShapeError("target of the first morphism is not the source of the second")
        by_source: Dict[Label, List[Tuple[Label, Scalar]]] = {}
        for (y, z), d in other.matrix.items():
            by_source.setdefault(y, []).append((z, d))
        total: Dict[Tuple[Label, Label], Scalar] = {}
        for (x, y), c in self.matrix.items():
            for z, d in by_source.get(y, ()):
                key = (x, z)
                total[key] = total[key] + c * d if key in total else c * d
        return LinearMorphism(self.source, other.target, self.ring, total)

    def tensor(self, other: "LinearMorphism") -> "LinearMorphism":

        self.__check(other)
        matrix = {
            ((x1, x2), (y1, y2)): c1 * c2
            for (x1, y1), c1 in self.matrix.items()
            for (x2, y2), c2 in other.matrix.items()
        }
        return LinearMorphism(
            self.source.product(other.source),
            self.target.product(other.target),
            self.ring,
            matrix,
        )

    def scale(self, c) -> "LinearMorphism":

        c = self.ring(c)
        return LinearMorphism(
            self.source, self.target, self.ring, {k: c * v for k, v in self.matrix.items()}
        )

    def __eq__(self, other) -> bool:

        return (
            isinstance(other, LinearMorphism)
            and self.ring == other.ring
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:

        return hash((self.source, self.target, self.ring, frozenset(self.matrix.items())))

    def __repr__(self) -> str:

        body = ", ".join(f"{k!r}:{v}" for k, v in self.matrix.items())
        return f"LinearMorphism[{self.ring}]({body})"


def compose_linear(beta: LinearMorphism, alpha: LinearMorphism) -> LinearMorphism:

    return alpha.then(beta)


def linearize(alpha: MultiMorphism, ring: BaseRing = ZZ) -> LinearMorphism:
    """Image of alpha in Multi(X, Y) (x) Lambda."""

    matrix = {(x, y): ring(c) for x in alpha.source for y, c in alpha(x).items}
    return LinearMorphism(alpha.source, alpha.target, ring, matrix)


def mv_to_corr(alpha: MultiMorphism) -> LinearMorphism:
    """The effective correspondence sum_y alpha(x)_y [y] over each point x."""

    return linearize(alpha, ZZ)


def corr_to_mv(c: LinearMorphism) -> MultiMorphism:
    """Inverse of mv_to_corr on correspondences with non-negative integer coefficients."""

    if c.ring.kind not in (RingKind.INTEGERS, RingKind.RATIONALS):
        raise ShapeError(f"correspondences over {c.ring} carry no sign", ring=str(c.ring))
    counts: Dict[Label, Dict[Label, int]] = {}
    for (x, y), value in c.matrix.items():
        number = value.to_number()
        if number != int(number):
            raise ShapeError(f"coefficient {value} at ({x!r}, {y!r}) is not an integer")
        if number < 0:
            raise NegativeCoefficientError(
                f"negative coefficient {value} at ({x!r}, {y!r})", coefficient=int(number)
            )
        counts.setdefault(x, {})[y] = int(number)
    return MultiMorphism.from_counts(c.source, c.target, counts)


@dataclass(frozen=True)
class HomDecomposition:
    """
    Multi(X_1 + ... + X_r, Y_1 + ... + Y_s) = prod_i sum_j Multi(X_i, Y_j).

    Attributes
    ----------
    source: FinSet
        The disjoint union, in block order.

    target: FinSet

    source_parts: tuple<FinSet>

    target_parts: tuple<FinSet>
    """

    source: FinSet
    target: FinSet
    source_parts: Tuple[FinSet, ...]
    target_parts: Tuple[FinSet, ...]

    def __block_of(self, y: Label) -> int:

        for j, part in enumerate(self.target_parts):
            if y in part:
                return j
        raise ShapeError(f"{y!r} is in no target block")

    def split(self, alpha: MultiMorphism) -> Dict[Tuple[int, int], MultiMorphism]:

        if (alpha.source, alpha.target) != (self.source, self.target):
            raise ShapeError("morphism does not match the decomposed sets")
        blocks = {}
        for i, Xi in enumerate(self.source_parts):
            rows: Dict[int, Dict[Label, Dict[Label, int]]] = {
                j: {} for j in range(len(self.target_parts))
            }
            for x in Xi:
                for y, c in alpha(x).items:
                    rows[self.__block_of(y)].setdefault(x, {})[y] = c
            for j, Yj in enumerate(self.target_parts):
                blocks[(i, j)] = MultiMorphism.from_counts(Xi, Yj, rows[j])
        return blocks

    def merge(self, blocks: Mapping[Tuple[int, int], MultiMorphism]) -> MultiMorphism:

        counts: Dict[Label, Counter] = {x: Counter() for x in self.source}
        for (i, j), block in blocks.items():
            if (block.source, block.target) != (self.source_parts[i], self.target_parts[j]):
                raise ShapeError(f"block ({i}, {j}) has the wrong shape", block=[i, j])
            for x in block.source:
                counts[x].update(block(x).counter())
        return MultiMorphism.from_counts(self.source, self.target, counts)


def _union(parts: Sequence[FinSet], whole: Optional[FinSet], side: str) -> FinSet:

    labels = [label for part in parts for label in part]
    if len(set(labels)) != len(labels):
        raise PartitionError(f"{side} blocks overlap", side=side)
    if whole is None:
        return FinSet(labels)
    if set(labels) != set(whole.elements):
        raise PartitionError(f"{side} blocks do not cover the {side}", side=side)
    return whole


def decompose_hom(
    source_parts: Sequence[FinSet],
    target_parts: Sequence[FinSet],
    source: Optional[FinSet] = None,
    target: Optional[FinSet] = None,
) -> HomDecomposition:
    """
    Params
    ------
    source_parts, target_parts: sequence<FinSet>
        Blocks of the disjoint unions.

    source, target: FinSet = None
        The unions themselves; when given the blocks must partition them.
        Otherwise the union is the concatenation of the blocks.
    """
    decomposition = HomDecomposition(
        _union(source_parts, source, "source"),
        _union(target_parts, target, "target"),
        tuple(source_parts),
        tuple(target_parts),
    )
    logger.debug(
        "hom decomposition into %d x %d blocks", len(source_parts), len(target_parts)
    )
    return decomposition
