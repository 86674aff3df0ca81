"""
Finite-discrete model of multivalued morphisms.

Objects are finite sets of labels; a multivalued morphism X -o Y sends each
x in X to a finite multiset of points of Y. Labels are any hashable JSON-like
values; product sets are labelled by pairs.
"""

from collections import Counter
from typing import Dict, Hashable, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from ..errors import NegativeCoefficientError, ShapeError

Label = Hashable


class FinSet:
    """
    Attributes
    ----------
    elements: tuple
        Distinct labels in their presentation order.
    """

    def __init__(self, elements: Iterable[Label]) -> None:

        self.elements = tuple(elements)
        self.__index = {label: i for i, label in enumerate(self.elements)}
        if len(self.__index) != len(self.elements):
            raise ShapeError("set labels must be distinct", labels=_plain(self.elements))

    @classmethod
    def labelled(cls, prefix: str, size: int) -> "FinSet":

        return cls(f"{prefix}{i}" for i in range(size))

    def __len__(self) -> int:

        return len(self.elements)

    def __iter__(self) -> Iterator[Label]:

        return iter(self.elements)

    def __contains__(self, label) -> bool:

        return label in self.__index

    def index(self, label: Label) -> int:

        if label not in self.__index:
            raise ShapeError(f"{label!r} is not an element of the set", label=_plain(label))
        return self.__index[label]

    def product(self, other: "FinSet") -> "FinSet":

        return FinSet((a, b) for a in self for b in other)

    def __eq__(self, other) -> bool:

        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self) -> int:

        return hash(self.elements)

    def __repr__(self) -> str:

        return f"FinSet({list(self.elements)})"


class Multiset:
    """
    Finite multiset of points of a FinSet, kept in canonical form: labels in
    the order of `over`, every count at least 1.

    Attributes
    ----------
    over: FinSet

    items: tuple<(label, int)>
    """

    def __init__(self, over: FinSet, counts: Optional[Mapping[Label, int]] = None) -> None:

        self.over = over
        counts = counts or {}
        for label, count in counts.items():
            over.index(label)
            if not isinstance(count, int):
                raise ShapeError(f"count of {label!r} must be an integer", label=_plain(label))
            if count < 0:
                raise NegativeCoefficientError(
                    f"negative count {count} at {label!r}", label=_plain(label), count=count
                )
        self.items = tuple(
            sorted(((y, c) for y, c in counts.items() if c), key=lambda item: over.index(item[0]))
        )

    @classmethod
    def of(cls, over: FinSet, labels: Iterable[Label]) -> "Multiset":

        return cls(over, Counter(labels))

    @property
    def size(self) -> int:

        return sum(c for _, c in self.items)

    def count(self, label: Label) -> int:

        return dict(self.items).get(label, 0)

    def support(self) -> Tuple[Label, ...]:

        return tuple(y for y, _ in self.items)

    def counter(self) -> Counter:

        return Counter(dict(self.items))

    def __add__(self, other: "Multiset") -> "Multiset":

        if other.over != self.over:
            raise ShapeError("multisets over different sets")
        return Multiset(self.over, self.counter() + other.counter())

    def __eq__(self, other) -> bool:

        return isinstance(other, Multiset) and self.over == other.over and self.items == other.items

    def __hash__(self) -> int:

        return hash((self.over, self.items))

    def to_list(self) -> list:

        return [{"y": _plain(y), "count": c} for y, c in self.items]

    def __repr__(self) -> str:

        body = ", ".join(f"{y!r}:{c}" for y, c in self.items)
        return "{" + body + "}"


class MultiMorphism:
    """
    Multivalued morphism source -o target.

    Attributes
    ----------
    source: FinSet

    target: FinSet

    assign: dict<label, Multiset>
        Total on the source; a missing label is read as the empty multiset.
    """

    def __init__(
        self, source: FinSet, target: FinSet, assign: Mapping[Label, Multiset] = None
    ) -> None:

        self.source = source
        self.target = target
        assign = dict(assign or {})
        for x, value in assign.items():
            source.index(x)
            if value.over != target:
                raise ShapeError(f"value at {x!r} is not a multiset over the target", x=_plain(x))
        empty = Multiset(target)
        self.assign: Dict[Label, Multiset] = {x: assign.get(x, empty) for x in source}

    @classmethod
    def from_counts(
        cls, source: FinSet, target: FinSet, counts: Mapping[Label, Mapping[Label, int]]
    ) -> "MultiMorphism":

        return cls(source, target, {x: Multiset(target, c) for x, c in counts.items()})

    def __call__(self, x: Label) -> Multiset:

        self.source.index(x)
        return self.assign[x]

    def degree_at(self, x: Label) -> int:

        return self(x).size

    def __eq__(self, other) -> bool:

        return (
            isinstance(other, MultiMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.assign == other.assign
        )

    def __hash__(self) -> int:

        return hash((self.source, self.target, tuple(self.assign[x] for x in self.source)))

    def to_dict(self) -> dict:

        return {
            "source": _plain(self.source.elements),
            "target": _plain(self.target.elements),
            "assign": [
                {"x": _plain(x), "multiset": self.assign[x].to_list()} for x in self.source
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "MultiMorphism":

        source = FinSet(_label(x) for x in data["source"])
        target = FinSet(_label(y) for y in data["target"])
        counts: Dict[Label, Counter] = {}
        for entry in data.get("assign", []):
            row = counts.setdefault(_label(entry["x"]), Counter())
            for item in entry.get("multiset", []):
                row[_label(item["y"])] += item["count"]
        return cls.from_counts(source, target, counts)

    def __repr__(self) -> str:

        body = ", ".join(f"{x!r}->{self.assign[x]!r}" for x in self.source)
        return f"MultiMorphism({body})"


def _plain(label):
    """JSON form of a label: tuples become lists."""

    if isinstance(label, tuple):
        return [_plain(part) for part in label]
    return label


def _label(value):

    if isinstance(value, list):
        return tuple(_label(part) for part in value)
    return value


def restrict(alpha: MultiMorphism, subset: Sequence[Label]) -> MultiMorphism:

    source = FinSet(subset)
    return MultiMorphism(source, alpha.target, {x: alpha(x) for x in source})
