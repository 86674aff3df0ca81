"""
Checker for the structure laws of the category of multivalued morphisms:
the abelian monoid structure on hom sets, biadditivity of composition and the
symmetric monoidal structure given by the tensor product, together with the
comparison with correspondences and the functoriality of transfers.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from math import comb, prod
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_combinations

from ..rings import GF, QQ, ZZ, BaseRing, random_scalar
from ..witness import CheckResult, combine
from .groups import GroupObject, group_catalog, transfer
from .objects import FinSet, MultiMorphism, Multiset
from .ops import (
    LinearMorphism,
    corr_to_mv,
    degree,
    homogeneous_degree,
    identity,
    linearize,
    mv_add,
    mv_compose,
    mv_tensor,
    mv_to_corr,
    relabel,
)

logger = logging.getLogger(__name__)

SLOTS = "xyzuvw"


class LawMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    GENERATORS = "generators"
    RANDOM = "random"


# enumeration


def multisets(Y: FinSet, max_degree: int) -> List[Multiset]:
    """Every multiset over Y of size at most max_degree."""

    found = [Multiset(Y)]
    for size in range(1, max_degree + 1):
        for labels in multiset_combinations({y: size for y in Y}, size):
            found.append(Multiset.of(Y, labels))
    return found


def choices(target_size: int, max_degree: int) -> int:

    return sum(comb(target_size + s - 1, s) for s in range(max_degree + 1))


def morphisms(X: FinSet, Y: FinSet, max_degree: int) -> Iterator[MultiMorphism]:

    values = multisets(Y, max_degree)
    for row in product(values, repeat=len(X)):
        yield MultiMorphism(X, Y, dict(zip(X, row)))


def generators(X: FinSet, Y: FinSet) -> List[MultiMorphism]:
    """Zero and the elementary morphisms x -> {y}, other points -> {}."""

    found = [MultiMorphism(X, Y)]
    for x in X:
        for y in Y:
            found.append(MultiMorphism(X, Y, {x: Multiset(Y, {y: 1})}))
    return found


def random_morphism(
    X: FinSet, Y: FinSet, max_degree: int, rng: random.Random
) -> MultiMorphism:

    assign = {}
    for x in X:
        size = rng.randint(0, max_degree)
        assign[x] = Multiset.of(Y, (rng.choice(Y.elements) for _ in range(size)))
    return MultiMorphism(X, Y, assign)


# laws

Equation = Callable[..., Tuple[MultiMorphism, MultiMorphism]]


@dataclass(frozen=True)
class Law:
    """
    Attributes
    ----------
    name: str

    sets: int
        Number of finite sets involved.

    shapes: tuple<(int, int)>
        (source slot, target slot) of each morphism argument.

    equation: callable
        Morphisms -> (left side, right side).
    """

    name: str
    sets: int
    shapes: Tuple[Tuple[int, int], ...]
    equation: Equation

    def instance_count(self, max_set_size: int, max_degree: int) -> int:

        total = 0
        for sizes in product(range(1, max_set_size + 1), repeat=self.sets):
            total += prod(
                choices(sizes[j], max_degree) ** sizes[i] for i, j in self.shapes
            )
        return total


def _swap(pair):

    return (pair[1], pair[0])


def _symmetry(a, b):

    ab = mv_tensor(a, b)
    ba = mv_tensor(b, a)
    return relabel(ab, ba.source, ba.target, _swap, _swap), ba


def _reassociate(triple):

    x1, (x2, x3) = triple
    return ((x1, x2), x3)


def _associate(triple):

    (y1, y2), y3 = triple
    return (y1, (y2, y3))


def _tensor_associativity(a, b, c):

    left = mv_tensor(mv_tensor(a, b), c)
    right = mv_tensor(a, mv_tensor(b, c))
    return relabel(left, right.source, right.target, _reassociate, _associate), right


LAWS: Tuple[Law, ...] = (
    Law("addition_commutative", 2, ((0, 1), (0, 1)),
        lambda a, b: (mv_add(a, b), mv_add(b, a))),
    Law("addition_associative", 2, ((0, 1), (0, 1), (0, 1)),
        lambda a, b, c: (mv_add(mv_add(a, b), c), mv_add(a, mv_add(b, c)))),
    Law("composition_associative", 4, ((0, 1), (1, 2), (2, 3)),
        lambda a, b, c: (mv_compose(c, mv_compose(b, a)), mv_compose(mv_compose(c, b), a))),
    Law("left_distributive", 3, ((0, 1), (1, 2), (1, 2)),
        lambda a, b, c: (mv_compose(mv_add(b, c), a), mv_add(mv_compose(b, a), mv_compose(c, a)))),
    Law("right_distributive", 3, ((0, 1), (0, 1), (1, 2)),
        lambda a, b, c: (mv_compose(c, mv_add(a, b)), mv_add(mv_compose(c, a), mv_compose(c, b)))),
    Law("tensor_symmetric", 4, ((0, 1), (2, 3)), _symmetry),
    Law("tensor_associative", 6, ((0, 1), (2, 3), (4, 5)), _tensor_associativity),
    Law("tensor_distributive", 4, ((0, 1), (2, 3), (2, 3)),
        lambda a, b, c: (mv_tensor(a, mv_add(b, c)), mv_add(mv_tensor(a, b), mv_tensor(a, c)))),
    Law("tensor_functorial", 6, ((0, 1), (1, 2), (3, 4), (4, 5)),
        lambda a1, b1, a2, b2: (
            mv_compose(mv_tensor(b1, b2), mv_tensor(a1, a2)),
            mv_tensor(mv_compose(b1, a1), mv_compose(b2, a2)),
        )),
)


def _instances(
    law: Law, max_set_size: int, max_degree: int, mode: LawMode,
    rng: random.Random, samples: int,
) -> Iterator[List[MultiMorphism]]:

    if mode is LawMode.RANDOM:
        for _ in range(samples):
            sets = [
                FinSet.labelled(SLOTS[k], rng.randint(1, max_set_size)) for k in range(law.sets)
            ]
            yield [random_morphism(sets[i], sets[j], max_degree, rng) for i, j in law.shapes]
        return

    for sizes in product(range(1, max_set_size + 1), repeat=law.sets):
        sets = [FinSet.labelled(SLOTS[k], size) for k, size in enumerate(sizes)]
        if mode is LawMode.GENERATORS:
            pools = [generators(sets[i], sets[j]) for i, j in law.shapes]
        else:
            pools = [list(morphisms(sets[i], sets[j], max_degree)) for i, j in law.shapes]
        for args in product(*pools):
            yield list(args)


def check_law(
    law: Law,
    max_set_size: int,
    max_degree: int,
    mode: LawMode = LawMode.EXHAUSTIVE,
    rng: Optional[random.Random] = None,
    samples: int = 500,
    instance_cap: int = 250000,
) -> CheckResult:

    if mode is LawMode.EXHAUSTIVE:
        count = law.instance_count(max_set_size, max_degree)
        if count > instance_cap:
            logger.warning(
                "%s has %d instances above the cap %d; checking generators only",
                law.name, count, instance_cap,
            )
            mode = LawMode.GENERATORS
    rng = rng or random.Random(0)

    checked = 0
    for args in _instances(law, max_set_size, max_degree, mode, rng, samples):
        checked += 1
        lhs, rhs = law.equation(*args)
        if lhs != rhs:
            return CheckResult.failed(
                law.name,
                {
                    "morphisms": [m.to_dict() for m in args],
                    "lhs": lhs.to_dict(),
                    "rhs": rhs.to_dict(),
                },
                checked,
                mode=mode.value,
            )
    logger.debug("%s: %d instances in %s mode", law.name, checked, mode.value)
    return CheckResult.passed(law.name, checked, mode=mode.value)


@dataclass
class LawReport:
    """
    Attributes
    ----------
    mode: LawMode
        The requested mode; each result records the mode actually used.

    max_set_size: int

    max_degree: int

    seed: int = None
        Recorded for random mode.

    results: list<CheckResult>
    """

    mode: LawMode
    max_set_size: int
    max_degree: int
    seed: Optional[int] = None
    results: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:

        return all(self.results)

    def to_dict(self) -> dict:

        data = {
            "mode": self.mode.value,
            "max_size": self.max_set_size,
            "max_degree": self.max_degree,
            "ok": self.ok,
            "laws": [r.to_dict() for r in self.results],
        }
        if self.seed is not None:
            data["seed"] = self.seed
        return data


def verify_category_laws(
    max_set_size: int = 2,
    max_degree: int = 2,
    mode: LawMode = LawMode.EXHAUSTIVE,
    seed: Optional[int] = None,
    samples: int = 500,
    instance_cap: int = 250000,
    laws: Sequence[Law] = LAWS,
) -> LawReport:
    """
    Check every structure law as an equation of multiset-valued maps.

    Params
    ------
    mode: LawMode
        EXHAUSTIVE enumerates all sets of size 1..max_set_size and all
        morphisms of pointwise degree <= max_degree, falling back to the
        generators of the hom monoids for a law whose instance count exceeds
        instance_cap. RANDOM draws `samples` instances per law from `seed`.
    """
    mode = LawMode(mode)
    report = LawReport(mode, max_set_size, max_degree, seed if mode is LawMode.RANDOM else None)
    for law in laws:
        rng = random.Random(f"{seed}:{law.name}")
        report.results.append(
            check_law(law, max_set_size, max_degree, mode, rng, samples, instance_cap)
        )
    return report


# comparisons


def _pairs(max_set_size: int, max_degree: int) -> Iterator[Tuple[MultiMorphism, MultiMorphism]]:

    for sizes in product(range(1, max_set_size + 1), repeat=3):
        X, Y, Z = (FinSet.labelled(SLOTS[k], size) for k, size in enumerate(sizes))
        second = list(morphisms(Y, Z, max_degree))
        for alpha in morphisms(X, Y, max_degree):
            for beta in second:
                yield alpha, beta


def check_correspondence(max_set_size: int = 2, max_degree: int = 2) -> CheckResult:
    """
    mv_to_corr is inverse to corr_to_mv, additive, degree preserving and
    compatible with composition and tensor product.
    """
    name = "correspondence"
    checked = 0
    for alpha, beta in _pairs(max_set_size, max_degree):
        checked += 1
        a, b = mv_to_corr(alpha), mv_to_corr(beta)
        failures = {
            "round_trip": corr_to_mv(a) != alpha,
            "composition": mv_to_corr(mv_compose(beta, alpha)) != a.then(b),
            "tensor": mv_to_corr(mv_tensor(alpha, beta)) != a.tensor(b),
            "additive": mv_to_corr(mv_add(alpha, alpha)) != a + a,
            "degree": any(
                sum((a.entry(x, y).to_number() for y in alpha.target), 0) != d
                for x, d in degree(alpha).items()
            ),
        }
        for part, failed in failures.items():
            if failed:
                return CheckResult.failed(
                    name,
                    {"part": part, "alpha": alpha.to_dict(), "beta": beta.to_dict()},
                    checked,
                )
    return CheckResult.passed(name, checked)


def _maps(Z: FinSet, group: GroupObject) -> Iterator[dict]:

    for values in product(group.elements.elements, repeat=len(Z)):
        yield dict(zip(Z, values))


def check_transfer(
    max_set_size: int = 2, max_degree: int = 2, max_group_order: int = 4
) -> CheckResult:
    """
    Transfers are contravariantly functorial, additive in the morphism and
    trivial along identities, for every catalogued group of small order.
    """
    results = []
    for group in group_catalog().values():
        if len(group) > max_group_order:
            continue
        name = f"transfer_{group.name}"
        checked = 0
        failure = None
        for alpha, beta in _pairs(max_set_size, max_degree):
            for f in _maps(beta.target, group):
                checked += 1
                pulled = transfer(group, beta, f)
                direct = transfer(group, mv_compose(beta, alpha), f)
                doubled = transfer(group, mv_add(beta, beta), f)
                if direct != transfer(group, alpha, pulled):
                    failure = "functorial"
                elif any(doubled[y] != group.add(pulled[y], pulled[y]) for y in beta.source):
                    failure = "additive"
                elif transfer(group, identity(beta.target), f) != f:
                    failure = "identity"
                if failure:
                    break
            if failure:
                results.append(CheckResult.failed(
                    name,
                    {
                        "part": failure,
                        "alpha": alpha.to_dict(),
                        "beta": beta.to_dict(),
                        "f": [[z, _plain_group(v)] for z, v in f.items()],
                    },
                    checked,
                ))
                break
        else:
            results.append(CheckResult.passed(name, checked))
    return combine("transfer", results)


def _plain_group(value):

    return list(value) if isinstance(value, tuple) else value


def random_linear(
    X: FinSet, Y: FinSet, ring: BaseRing, rng: random.Random, density: float = 0.6
) -> LinearMorphism:

    matrix = {
        (x, y): random_scalar(ring, rng, 4) for x in X for y in Y if rng.random() < density
    }
    return LinearMorphism(X, Y, ring, matrix)


def check_linear_extension(
    rng: random.Random,
    rings: Sequence[BaseRing] = (ZZ, GF(3), QQ),
    samples: int = 30,
    max_set_size: int = 3,
    max_degree: int = 2,
) -> CheckResult:
    """
    The Lambda-linear extension is associative, biadditive and functorial for
    the tensor product, and linearize respects composition and tensor product.
    """
    results = []
    for ring in rings:
        name = f"linear_{ring}"
        failure = None
        for k in range(samples):
            sets = [FinSet.labelled(SLOTS[i], rng.randint(1, max_set_size)) for i in range(4)]
            a = random_linear(sets[0], sets[1], ring, rng)
            a2 = random_linear(sets[0], sets[1], ring, rng)
            b = random_linear(sets[1], sets[2], ring, rng)
            c = random_linear(sets[2], sets[3], ring, rng)
            alpha = random_morphism(sets[0], sets[1], max_degree, rng)
            beta = random_morphism(sets[1], sets[2], max_degree, rng)
            if a.then(b).then(c) != a.then(b.then(c)):
                failure = "associative"
            elif (a + a2).then(b) != a.then(b) + a2.then(b):
                failure = "additive"
            elif a.tensor(b).then(b.tensor(c)) != a.then(b).tensor(b.then(c)):
                failure = "tensor_functorial"
            elif linearize(mv_compose(beta, alpha), ring) != linearize(alpha, ring).then(
                linearize(beta, ring)
            ):
                failure = "linearize_composition"
            elif linearize(mv_tensor(alpha, beta), ring) != linearize(alpha, ring).tensor(
                linearize(beta, ring)
            ):
                failure = "linearize_tensor"
            if failure:
                results.append(CheckResult.failed(
                    name,
                    {"part": failure, "sample": k, "alpha": alpha.to_dict(), "beta": beta.to_dict()},
                    k + 1,
                ))
                break
        else:
            results.append(CheckResult.passed(name, samples))
    return combine("linear_extension", results)


def check_degrees(max_set_size: int = 2, max_degree: int = 2) -> CheckResult:
    """Degrees multiply under composition and tensor product of homogeneous morphisms."""

    name = "degree_multiplicative"
    checked = 0
    for alpha, beta in _pairs(max_set_size, max_degree):
        a, b = homogeneous_degree(alpha), homogeneous_degree(beta)
        if a is None or b is None:
            continue
        checked += 1
        composed = homogeneous_degree(mv_compose(beta, alpha))
        tensored = homogeneous_degree(mv_tensor(alpha, beta))
        if composed != a * b or tensored != a * b:
            return CheckResult.failed(
                name,
                {
                    "alpha": alpha.to_dict(),
                    "beta": beta.to_dict(),
                    "composed": composed,
                    "tensored": tensored,
                },
                checked,
            )
    return CheckResult.passed(name, checked)
