"""
Permutations of tensor slots and the embeddings of products of symmetric
groups into larger symmetric groups.

Slots are 0-based. The grid index of (x, y) with x in [m], y in [n] is
x + m * y; the wreath product S_m acting on n-element columns
{x, x + m, ..., x + m(n-1)} permutes the columns and each column separately.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from sympy.combinatorics import Permutation

from ..errors import ShapeError
from ..witness import CheckResult


def identity(n: int) -> Permutation:

    return Permutation(list(range(n)))


def compose(f: Permutation, g: Permutation) -> Permutation:
    """f after g."""

    return Permutation([f(g(i)) for i in range(g.size)])


def sign(sigma: Permutation) -> int:

    return sigma.signature()


def symmetric_group(n: int) -> Iterator[Permutation]:

    for images in itertools.permutations(range(n)):
        yield Permutation(list(images))


def adjacent_transpositions(n: int) -> Tuple[Permutation, ...]:
    """Generators of S_n."""

    gens = []
    for i in range(n - 1):
        images = list(range(n))
        images[i], images[i + 1] = i + 1, i
        gens.append(Permutation(images))
    return tuple(gens)


def permute_tuple(u: tuple, sigma: Permutation) -> tuple:
    """sigma . (x_1 (x) ... (x) x_n) = x_sigma^-1(1) (x) ... : slot i moves to sigma(i)."""

    result = [None] * len(u)
    for i, x in enumerate(u):
        result[sigma(i)] = x
    return tuple(result)


@lru_cache(maxsize=65536)
def orbit(u: tuple, generators: Tuple[Tuple[int, ...], ...]) -> Tuple[tuple, ...]:
    """
    Orbit of a slot tuple under the group generated by permutations given as
    image tuples, in sorted order, by breadth-first closure.
    """
    perms = [Permutation(list(g)) for g in generators]
    seen = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for v in frontier:
            for g in perms:
                w = permute_tuple(v, g)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(seen))


class EmbeddingKind(str, Enum):
    PRODUCT = "product"
    GRID = "grid"
    WREATH = "wreath"


@dataclass(frozen=True)
class GroupEmbedding:
    """
    One of the embeddings
      product: S_n1 x ... x S_nr -> S_(n1 + ... + nr), blocks side by side;
      grid: S_m x S_n -> S_mn, (x, y) -> (sigma x, tau y);
      wreath: S_m ⋉ S_n^m -> S_mn, (x, y) -> (sigma x, tau_x y).

    Attributes
    ----------
    kind: EmbeddingKind

    sizes: tuple<int>
        (n1, ..., nr) for product, (m, n) otherwise.
    """

    kind: EmbeddingKind
    sizes: Tuple[int, ...]

    def __post_init__(self) -> None:

        if self.kind is not EmbeddingKind.PRODUCT and len(self.sizes) != 2:
            raise ShapeError(f"{self.kind.value} embedding takes (m, n)")

    @property
    def degree(self) -> int:

        if self.kind is EmbeddingKind.PRODUCT:
            return sum(self.sizes)
        m, n = self.sizes
        return m * n

    def __call__(self, element) -> Permutation:

        if self.kind is EmbeddingKind.PRODUCT:
            images = []
            offset = 0
            for size, sigma in zip(self.sizes, element):
                images.extend(offset + sigma(i) for i in range(size))
                offset += size
            return Permutation(images)

        m, n = self.sizes
        sigma, taus = element
        images = [0] * (m * n)
        for y in range(n):
            for x in range(m):
                tau = taus if self.kind is EmbeddingKind.GRID else taus[x]
                images[x + m * y] = sigma(x) + m * tau(y)
        return Permutation(images)

    def elements(self) -> Iterator:

        if self.kind is EmbeddingKind.PRODUCT:
            yield from itertools.product(*(list(symmetric_group(k)) for k in self.sizes))
            return
        m, n = self.sizes
        if self.kind is EmbeddingKind.GRID:
            yield from itertools.product(list(symmetric_group(m)), list(symmetric_group(n)))
            return
        columns = list(itertools.product(list(symmetric_group(n)), repeat=m))
        for sigma in symmetric_group(m):
            for taus in columns:
                yield (sigma, taus)

    def multiply(self, g, h):
        """Group law of the source, matching the action on grid indices."""

        if self.kind is EmbeddingKind.PRODUCT:
            return tuple(compose(a, b) for a, b in zip(g, h))
        if self.kind is EmbeddingKind.GRID:
            return (compose(g[0], h[0]), compose(g[1], h[1]))
        sigma, taus = g
        sigma2, taus2 = h
        m = self.sizes[0]
        return (
            compose(sigma, sigma2),
            tuple(compose(taus[sigma2(x)], taus2[x]) for x in range(m)),
        )

    def verify(self, limit: int = 200) -> CheckResult:
        """
        Homomorphism and injectivity, exhaustively over the first `limit`
        source elements (pairs for the homomorphism property).
        """
        name = f"embedding_{self.kind.value}"
        elements = list(itertools.islice(self.elements(), limit))
        images = {}
        for g in elements:
            image = tuple(self(g).array_form)
            if image in images:
                return CheckResult.failed(name, {"reason": "not injective", "image": list(image)})
            images[image] = g
        checked = 0
        for g in elements:
            for h in elements:
                if self(self.multiply(g, h)) != compose(self(g), self(h)):
                    return CheckResult.failed(name, {"reason": "not a homomorphism"}, checked)
                checked += 1
        return CheckResult.passed(name, checked)


def embed(kind: str, sizes: Sequence[int], element) -> Permutation:

    return GroupEmbedding(EmbeddingKind(kind), tuple(sizes))(element)


def generators_key(generators: Sequence[Permutation]) -> Tuple[Tuple[int, ...], ...]:

    return tuple(tuple(g.array_form) for g in generators)


def wreath_generators(m: int, n: int) -> List[Permutation]:
    """Generators of S_m ⋉ S_n^m inside S_mn."""

    embedding = GroupEmbedding(EmbeddingKind.WREATH, (m, n))
    gens = []
    ident_n = identity(n)
    for sigma in adjacent_transpositions(m):
        gens.append(embedding((sigma, tuple(ident_n for _ in range(m)))))
    for x in range(m):
        for tau in adjacent_transpositions(n):
            taus = tuple(tau if z == x else ident_n for z in range(m))
            gens.append(embedding((identity(m), taus)))
    return gens
