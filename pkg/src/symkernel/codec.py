"""
JSON encoding of rings, scalars, algebras, tensors, divided powers,
multivalued morphisms and covers.

Integers and residues are decimal strings, rationals {"num", "den"} and
polynomials term lists; every encoder has a decoder that reproduces the value
exactly. `canonical` renders payloads byte-deterministically.
"""

import json
from fractions import Fraction
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Mapping, Union

from .algebra import AlgElement, MultTableAlgebra
from .cech import Cover
from .divided import DividedElement
from .errors import CodecError, SymKernelError
from .multivalued import MultiMorphism
from .rings import BaseRing, RingKind, Scalar
from .symfun import SymPolyExpr
from .tensor import SymTensor, TensorElement

Base = Union[BaseRing, MultTableAlgebra]


def canonical(data: Any) -> str:
    """Sorted keys, fixed separators, one trailing newline."""

    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def load_json(path: Union[str, Path]) -> Any:

    try:
        return json.loads(Path(path).read_text())
    except (OSError, ValueError) as err:
        raise CodecError(f"cannot read {path}: {err}", path=str(path))


def decoding(func: Callable) -> Callable:
    """Report malformed payloads as CodecError."""

    @wraps(func)
    def wrapper(*args, **kwargs):

        try:
            return func(*args, **kwargs)
        except SymKernelError:
            raise
        except (KeyError, TypeError, ValueError, IndexError, AttributeError) as err:
            raise CodecError(f"malformed {func.__name__[7:]} payload: {err!r}")

    return wrapper


# rings


def encode_ring(ring: BaseRing) -> dict:

    data = {"kind": ring.kind.value}
    if ring.kind is RingKind.PRIME_FIELD:
        data["modulus"] = str(ring.modulus)
    if ring.is_poly:
        data["coefficients"] = encode_ring(ring.coefficients)
        data["variables"] = list(ring.variables)
    return data


@decoding
def decode_ring(data: Mapping) -> BaseRing:

    kind = RingKind(data["kind"])
    if kind is RingKind.INTEGERS:
        return BaseRing.integers()
    if kind is RingKind.RATIONALS:
        return BaseRing.rationals()
    if kind is RingKind.PRIME_FIELD:
        return BaseRing.prime_field(int(data["modulus"]))
    return BaseRing.poly(decode_ring(data["coefficients"]), data["variables"])


def _encode_number(value) -> Union[str, dict]:

    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    return str(value)


def _decode_number(data) -> Union[int, Fraction]:

    if isinstance(data, Mapping):
        return Fraction(int(data["num"]), int(data["den"]))
    if isinstance(data, bool) or not isinstance(data, (str, int)):
        raise CodecError(f"{data!r} is not an encoded number")
    return int(data)


def encode_scalar(x: Scalar):

    ring = x.ring
    if not ring.is_poly:
        return _encode_number(x.to_number())
    ground = ring.coefficients
    return [
        {"exponents": list(monom), "coeff": encode_scalar(ground.element(c))}
        for monom, c in sorted(x.value.items())
    ]


@decoding
def decode_scalar(data, ring: BaseRing) -> Scalar:

    if not ring.is_poly:
        return ring(_decode_number(data))
    terms = {}
    for term in data:
        terms[tuple(term["exponents"])] = decode_scalar(term["coeff"], ring.coefficients)
    return ring.from_terms(terms)


# algebras


def encode_coefficient(c, base: Base):

    if isinstance(base, MultTableAlgebra):
        return encode_element(c)
    return encode_scalar(c)


def decode_coefficient(data, base: Base):

    if isinstance(base, MultTableAlgebra):
        return decode_element(data, base)
    return decode_scalar(data, base)


def encode_base(base: Base) -> dict:

    if isinstance(base, MultTableAlgebra):
        return {"algebra": encode_algebra(base)}
    return encode_ring(base)


def decode_base(data: Mapping) -> Base:

    if "algebra" in data:
        return decode_algebra(data["algebra"])
    return decode_ring(data)


def encode_algebra(algebra: MultTableAlgebra) -> dict:
    """{base, rank, labels, table (rank^3 entries, c_ij^k at i, j, k), unit}."""

    base = algebra.base
    return {
        "base": encode_base(base),
        "rank": algebra.rank,
        "labels": list(algebra.labels),
        "table": [
            encode_coefficient(c, base) for row in algebra.table for entry in row for c in entry
        ],
        "unit": [encode_coefficient(c, base) for c in algebra.unit],
    }


@decoding
def decode_algebra(data: Mapping, validate: bool = True) -> MultTableAlgebra:

    base = decode_base(data["base"])
    n = int(data["rank"])
    labels = data.get("labels") or [f"e{i}" for i in range(1, n + 1)]
    flat = [decode_coefficient(c, base) for c in data["table"]]
    if len(flat) != n ** 3:
        raise CodecError(f"table must have {n ** 3} entries, got {len(flat)}")
    table = [[flat[(i * n + j) * n:(i * n + j + 1) * n] for j in range(n)] for i in range(n)]
    unit = [decode_coefficient(c, base) for c in data["unit"]]
    return MultTableAlgebra(base, labels, table, unit, validate=validate)


def encode_element(x: AlgElement) -> list:

    return [encode_coefficient(c, x.algebra.base) for c in x.coords]


@decoding
def decode_element(data, algebra: MultTableAlgebra) -> AlgElement:

    if len(data) != algebra.rank:
        raise CodecError(f"{algebra.rank} coordinates expected, got {len(data)}")
    return algebra.element([decode_coefficient(c, algebra.base) for c in data])


# tensors


def encode_tensor(t: Union[TensorElement, SymTensor], with_algebra: bool = True) -> dict:

    if isinstance(t, SymTensor):
        terms, kind = t.coeffs, "orbit_sums"
    else:
        terms, kind = t.terms, "tuples"
    base = t.algebra.base
    data = {
        "n": t.n,
        "basis": kind,
        "terms": [
            {"tuple": list(u), "coeff": encode_coefficient(c, base)}
            for u, c in sorted(terms.items())
        ],
    }
    if with_algebra:
        data["algebra"] = encode_algebra(t.algebra)
    return data


@decoding
def decode_tensor(data: Mapping, algebra: MultTableAlgebra = None) -> Union[TensorElement, SymTensor]:

    if algebra is None:
        algebra = decode_algebra(data["algebra"])
    n = int(data["n"])
    terms = {}
    for term in data.get("terms", []):
        u = tuple(int(i) for i in term["tuple"])
        if len(u) != n or any(not 0 <= i < algebra.rank for i in u):
            raise CodecError(f"tuple {list(u)} is not a basis tuple of the {n}-th power")
        terms[u] = decode_coefficient(term["coeff"], algebra.base)
    if data.get("basis", "tuples") == "orbit_sums":
        return SymTensor(algebra, n, terms)
    return TensorElement(algebra, n, terms)


# symmetric polynomials


def encode_sympoly(p: SymPolyExpr) -> dict:

    return {
        "alphabet_sizes": list(p.alphabet_sizes),
        "ring": encode_ring(p.ring),
        "expr": encode_scalar(p.expr),
    }


@decoding
def decode_sympoly(data: Mapping) -> SymPolyExpr:

    ring = decode_ring(data["ring"])
    return SymPolyExpr(tuple(data["alphabet_sizes"]), decode_scalar(data["expr"], ring))


# divided powers


def encode_divided(u: DividedElement) -> dict:

    return {
        "base": encode_ring(u.base),
        "labels": list(u.labels),
        "degree": u.degree,
        "terms": [
            {
                "multiset": [
                    {"label": label, "count": e} for label, e in zip(u.labels, delta) if e
                ],
                "coeff": encode_scalar(c),
            }
            for delta, c in sorted(u.terms.items())
        ],
    }


@decoding
def decode_divided(data: Mapping) -> DividedElement:

    base = decode_ring(data["base"])
    labels = list(data["labels"])
    terms = {}
    for term in data.get("terms", []):
        delta = [0] * len(labels)
        for item in term["multiset"]:
            delta[labels.index(item["label"])] += int(item["count"])
        terms[tuple(delta)] = decode_scalar(term["coeff"], base)
    return DividedElement(base, labels, int(data["degree"]), terms)


# morphisms and covers


def encode_morphism(alpha: MultiMorphism) -> dict:

    return alpha.to_dict()


@decoding
def decode_morphism(data: Mapping) -> MultiMorphism:

    return MultiMorphism.from_dict(data)


def encode_cover(cover: Cover) -> dict:

    return cover.to_dict()


@decoding
def decode_cover(data: Mapping) -> Cover:

    return Cover.from_dict(data)
