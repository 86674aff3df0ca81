from fractions import Fraction
from pathlib import Path

import pytest

from symkernel.algebra import gaussian_integers, quadratic
from symkernel.codec import (
    canonical,
    decode_algebra,
    decode_divided,
    decode_ring,
    decode_scalar,
    decode_tensor,
    encode_algebra,
    encode_divided,
    encode_ring,
    encode_scalar,
    encode_tensor,
    load_json,
)
from symkernel.divided import gamma_of
from symkernel.errors import CodecError
from symkernel.rings import GF, QQ, ZZ
from symkernel.tensor import SymTensor

# get the resources folder in the tests folder
RESOURCES = Path(__file__).parent / "resources"


def test_canonical_form():

    assert canonical({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}\n'


def test_numbers_are_strings():

    assert encode_scalar(ZZ(12345678901234567890)) == "12345678901234567890"
    assert encode_scalar(QQ(Fraction(-3, 4))) == {"num": "-3", "den": "4"}
    assert decode_scalar({"num": "-3", "den": "4"}, QQ) == QQ(Fraction(-3, 4))
    with pytest.raises(CodecError):
        decode_scalar(1.5, QQ)


def test_rings():

    Zt = ZZ.extend("t")

    assert encode_ring(GF(7)) == {"kind": "prime_field", "modulus": "7"}
    assert decode_ring(encode_ring(Zt)) == Zt
    assert decode_ring(encode_ring(GF(7))) == GF(7)
    with pytest.raises(CodecError):
        decode_ring({"kind": "octonions"})


def test_polynomial_scalars():

    Zt = ZZ.extend("t")
    p = Zt.gen("t") ** 2 * 3 - 1

    assert encode_scalar(p) == [
        {"exponents": [0], "coeff": "-1"},
        {"exponents": [2], "coeff": "3"},
    ]
    assert decode_scalar(encode_scalar(p), Zt) == p


def test_algebra_resource():

    data = load_json(RESOURCES / "sample_algebra.json")

    assert decode_algebra(data) == gaussian_integers()
    assert encode_algebra(decode_algebra(data)) == encode_algebra(gaussian_integers())


def test_algebra_over_algebra():

    lower = quadratic(QQ, 2)
    upper = quadratic(lower, 3, "t")

    assert decode_algebra(encode_algebra(upper)) == upper


def test_algebra_table_size():

    data = load_json(RESOURCES / "sample_algebra.json")
    data["table"] = data["table"][:-1]
    with pytest.raises(CodecError):
        decode_algebra(data)


def test_tensor_resource():

    t = decode_tensor(load_json(RESOURCES / "sample_tensor.json"))

    assert isinstance(t, SymTensor)
    assert t.n == 2
    assert t.coeffs == {(0, 1): ZZ(1), (1, 1): ZZ(3)}


def test_tensor_tuple_out_of_range():

    data = encode_tensor(SymTensor.one(gaussian_integers(), 2))
    data["terms"][0]["tuple"] = [0, 5]
    with pytest.raises(CodecError):
        decode_tensor(data)


def test_divided_multisets():

    u = gamma_of(gaussian_integers().element([2, 3]), 2)
    data = encode_divided(u)

    assert data["terms"][0]["multiset"] == [{"label": "i", "count": 2}]
    assert decode_divided(data) == u


def test_missing_file():

    with pytest.raises(CodecError):
        load_json(RESOURCES / "missing.json")


def test_malformed_payload():

    with pytest.raises(CodecError):
        decode_algebra({"rank": 2})
