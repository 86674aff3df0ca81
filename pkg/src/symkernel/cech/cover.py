"""
Finite pseudocovers f_i: U_i -> X of a finite set and their Cech complexes.

A basis element of degree -n of the full Cech complex is a tuple
((i_0, u_0), ..., (i_n, u_n)) of points of the pieces with a common image in
X; the reduced complex keeps the tuples whose piece indices increase in a
chosen order of the pieces. Both are augmented by the map to Z[X] placed in
degree 1, and the differential is the alternating sum of the faces forgetting
one entry.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import prod
from typing import Dict, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy import Matrix, eye, zeros
from sympy.combinatorics import Permutation

from ..errors import NotSurjectiveError, NotUnifibrantError, ShapeError
from ..multivalued import FinSet
from .complex import ChainComplex, ChainMap

logger = logging.getLogger(__name__)

Point = Tuple[int, Hashable]


@dataclass(frozen=True)
class Piece:
    """
    Attributes
    ----------
    elements: FinSet

    map: dict<label, label>
        f_i, total on the elements.
    """

    elements: FinSet
    map: Mapping

    def fibre(self, x) -> Tuple:

        return tuple(u for u in self.elements if self.map[u] == x)


class Cover:
    """
    Attributes
    ----------
    base: FinSet

    pieces: tuple<Piece>
        Ordered by their index.
    """

    def __init__(self, base: FinSet, pieces: Sequence[Piece]) -> None:

        self.base = base
        self.pieces = tuple(pieces)
        for i, piece in enumerate(self.pieces):
            for u in piece.elements:
                if u not in piece.map:
                    raise ShapeError(f"piece {i} does not map {u!r}", piece=i)
                if piece.map[u] not in base:
                    raise ShapeError(
                        f"piece {i} maps {u!r} outside the base", piece=i, image=str(piece.map[u])
                    )
        self.__fibres = {
            (i, x): piece.fibre(x) for i, piece in enumerate(self.pieces) for x in base
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Cover":

        base = FinSet(data["base"])
        pieces = []
        for entry in data.get("pieces", []):
            pieces.append(Piece(FinSet(entry["elements"]), dict(entry["map"])))
        return cls(base, pieces)

    @classmethod
    def from_profiles(cls, rows: Sequence[Sequence[int]], base: Optional[FinSet] = None) -> "Cover":
        """
        Cover whose piece i has rows[i][k] points over the k-th base point.
        """
        width = len(rows[0]) if rows else 0
        base = base or FinSet.labelled("p", width)
        pieces = []
        for i, row in enumerate(rows):
            labels, images = [], {}
            for x, count in zip(base, row):
                for _ in range(count):
                    label = f"u{i}_{len(labels)}"
                    labels.append(label)
                    images[label] = x
            pieces.append(Piece(FinSet(labels), images))
        return cls(base, pieces)

    def to_dict(self) -> dict:

        return {
            "base": list(self.base.elements),
            "pieces": [
                {"elements": list(p.elements.elements), "map": dict(p.map)} for p in self.pieces
            ],
        }

    def fibre(self, i: int, x) -> Tuple:

        return self.__fibres[(i, x)]

    def profile(self, x) -> Tuple[int, ...]:
        """a_i(x) = |f_i^-1(x)| for every piece i."""

        self.base.index(x)
        return tuple(len(self.fibre(i, x)) for i in range(len(self.pieces)))

    def image(self, point: Point):

        i, u = point
        return self.pieces[i].map[u]

    @property
    def uncovered(self) -> List:

        return [x for x in self.base if not any(self.profile(x))]

    @property
    def surjective(self) -> bool:

        return not self.uncovered

    def __len__(self) -> int:

        return len(self.pieces)

    def __repr__(self) -> str:

        return f"Cover({[self.profile(x) for x in self.base]})"


def _check_order(cover: Cover, order: Optional[Sequence[int]]) -> Tuple[int, ...]:

    if order is None:
        return tuple(range(len(cover)))
    order = tuple(order)
    if sorted(order) != list(range(len(cover))):
        raise ShapeError("order must list every piece index once", order=list(order))
    return order


def _tuples(
    cover: Cover, points: Sequence, length: int, reduced: bool, order: Tuple[int, ...]
) -> Iterator[Tuple[Point, ...]]:

    for x in points:
        if reduced:
            for indices in combinations(order, length):
                for choice in product(*(cover.fibre(i, x) for i in indices)):
                    yield tuple(zip(indices, choice))
        else:
            over = [(i, u) for i in order for u in cover.fibre(i, x)]
            yield from product(over, repeat=length)


def cech_complex(
    cover: Cover,
    depth: int,
    reduced: bool,
    order: Optional[Sequence[int]] = None,
    points: Optional[Sequence] = None,
) -> ChainComplex:
    """
    Augmented Cech complex in degrees -depth..1, truncated earlier when a
    degree has no basis. Degree 1 is Z[points].
    """
    if depth < 0:
        raise ShapeError("depth must be non-negative", depth=depth)
    order = _check_order(cover, order)
    points = tuple(cover.base if points is None else points)

    bases: Dict[int, tuple] = {1: points}
    for n in range(depth + 1):
        basis = tuple(_tuples(cover, points, n + 1, reduced, order))
        if not basis and n > 0:
            break
        bases[-n] = basis

    differentials = {}
    for k in range(min(bases), 1):
        index = {label: r for r, label in enumerate(bases[k + 1])}
        D = zeros(len(bases[k + 1]), len(bases[k]))
        for col, T in enumerate(bases[k]):
            if len(T) == 1:
                D[index[cover.image(T[0])], col] += 1
                continue
            for m in range(len(T)):
                D[index[T[:m] + T[m + 1:]], col] += (-1) ** m
        differentials[k] = D
    complex_ = ChainComplex(bases, differentials)
    logger.debug(
        "%s cech complex with ranks %s", "reduced" if reduced else "full", complex_.ranks()
    )
    return complex_


def full_cech(cover: Cover, depth: int) -> ChainComplex:

    return cech_complex(cover, depth, reduced=False)


def reduced_cech(
    cover: Cover, order: Optional[Sequence[int]] = None, depth: Optional[int] = None
) -> ChainComplex:

    depth = max(len(cover) - 1, 0) if depth is None else depth
    return cech_complex(cover, depth, reduced=True, order=order)


def reorder_iso(cover: Cover, order1: Sequence[int], order2: Sequence[int]) -> ChainMap:
    """
    Isomorphism from the reduced complex for order1 to the one for order2:
    a tuple goes to sgn(sigma) times its re-ordering by sigma.
    """
    order1 = _check_order(cover, order1)
    order2 = _check_order(cover, order2)
    source = reduced_cech(cover, order1)
    target = reduced_cech(cover, order2)
    position = {i: k for k, i in enumerate(order2)}

    components = {1: eye(source.rank(1))}
    for k in source.degrees:
        if k == 1:
            continue
        index = {label: r for r, label in enumerate(target.bases[k])}
        F = zeros(target.rank(k), source.rank(k))
        for col, T in enumerate(source.bases[k]):
            ranks = [position[i] for i, _ in T]
            sigma = sorted(range(len(T)), key=lambda m: ranks[m])
            reordered = tuple(T[m] for m in sigma)
            F[index[reordered], col] = Permutation(sigma).signature()
        components[k] = F
    return ChainMap(source, target, components)


# per point


@lru_cache(maxsize=None)
def _profile_complex(profile: Tuple[int, ...], reduced: bool, depth: int) -> ChainComplex:

    return cech_complex(Cover.from_profiles([[a] for a in profile]), depth, reduced)


@lru_cache(maxsize=None)
def _profile_exact(profile: Tuple[int, ...]) -> bool:

    return _profile_complex(profile, True, max(len(profile) - 1, 0)).is_exact()


def point_complex(
    cover: Cover, x, reduced: bool = True, depth: Optional[int] = None
) -> ChainComplex:
    """
    The summand l_x spanned by tuples over x. It depends only on the fibre
    profile of x and is shared between points and covers with equal profiles;
    basis entries are labelled (piece, position in the fibre) accordingly.
    """
    if depth is None:
        depth = max(len(cover) - 1, 0)
    return _profile_complex(cover.profile(x), reduced, depth)


def unifibrant_witnesses(cover: Cover) -> Dict[Hashable, Optional[int]]:
    """Smallest piece index with exactly one point over x, or None."""

    witnesses = {}
    for x in cover.base:
        witnesses[x] = next((i for i, a in enumerate(cover.profile(x)) if a == 1), None)
    return witnesses


def is_unifibrant(cover: Cover) -> bool:

    return all(w is not None for w in unifibrant_witnesses(cover).values())


def is_finitistic(cover: Cover) -> bool:
    """Exactness of the augmented reduced complex, decided point by point."""

    if not cover.surjective:
        raise NotSurjectiveError(
            "the pieces do not cover the base", uncovered=[str(x) for x in cover.uncovered]
        )
    return all(_profile_exact(cover.profile(x)) for x in cover.base)


def euler_char(cover: Cover, x) -> int:

    return prod(1 - a for a in cover.profile(x))


@dataclass
class HomotopyWitness:
    """
    Contraction h of l_x with h d + d h = id.

    Attributes
    ----------
    complex: ChainComplex
        The reduced complex restricted to x, with the original labels.

    piece: int
        The witness piece, minimal among pieces with one point over x.

    maps: dict<int, Matrix>
        h^k from degree k to degree k - 1.
    """

    complex: ChainComplex
    piece: int
    maps: Dict[int, Matrix] = field(default_factory=dict)

    def h(self, k: int) -> Matrix:

        if k in self.maps:
            return self.maps[k]
        return zeros(self.complex.rank(k - 1), self.complex.rank(k))

    def verify(self) -> bool:

        C = self.complex
        return all(
            self.h(k + 1) * C.d(k) + C.d(k - 1) * self.h(k) == eye(C.rank(k))
            for k in C.degrees
        )


def homotopy_witness(cover: Cover, x) -> HomotopyWitness:
    """
    h(T) = (-1)^p T with (i, w) inserted at its place p when T avoids the
    witness piece i, and 0 otherwise; on the augmentation h(x) = (i, w).
    """
    piece = unifibrant_witnesses(cover)[x]
    if piece is None:
        raise NotUnifibrantError(f"no piece has exactly one point over {x!r}", point=str(x))
    (w,) = cover.fibre(piece, x)
    C = cech_complex(cover, max(len(cover) - 1, 0), reduced=True, points=[x])

    maps = {}
    for k in C.degrees:
        if k - 1 < C.low:
            continue
        index = {label: r for r, label in enumerate(C.bases[k - 1])}
        H = zeros(C.rank(k - 1), C.rank(k))
        for col, label in enumerate(C.bases[k]):
            T = () if k == 1 else label
            if any(i == piece for i, _ in T):
                continue
            p = sum(1 for i, _ in T if i < piece)
            H[index[T[:p] + ((piece, w),) + T[p:]], col] = (-1) ** p
        maps[k] = H
    witness = HomotopyWitness(C, piece, maps)
    logger.debug("homotopy at %r through piece %d", x, piece)
    return witness


# enumeration


def enumerate_covers(
    max_base: int = 3, max_pieces: int = 3, max_piece_size: int = 4
) -> Iterator[Cover]:
    """
    Every jointly surjective cover with |X| <= max_base, 1..max_pieces
    non-empty pieces of at most max_piece_size points, once per isomorphism
    class: pieces and base points are only distinguished by fibre counts.
    """
    for width in range(1, max_base + 1):
        rows = [
            row
            for row in product(range(max_piece_size + 1), repeat=width)
            if 0 < sum(row) <= max_piece_size
        ]
        seen = set()
        for count in range(1, max_pieces + 1):
            for chosen in combinations_with_replacement(rows, count):
                if not all(any(row[k] for row in chosen) for k in range(width)):
                    continue
                key = min(
                    tuple(sorted(tuple(row[k] for k in perm) for row in chosen))
                    for perm in permutations(range(width))
                )
                if key in seen:
                    continue
                seen.add(key)
                yield Cover.from_profiles(key)
