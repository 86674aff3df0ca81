import random
from fractions import Fraction

import pytest

from symkernel.errors import NotInvertibleError, RingMismatchError, VariableError
from symkernel.rings import GF, QQ, ZZ, BaseRing, RingHom, poly_coeff, random_scalar, unit_inverse
from symkernel.rings import matrix as mx


def test_integers_are_exact():

    assert ZZ(2) ** 100 == 2**100
    assert ZZ(-7) * ZZ(6) == -42


def test_prime_field_arithmetic():

    F5 = GF(5)
    assert F5(3) * F5(2) == 1
    assert unit_inverse(F5(2)) == 3
    assert F5(4) + F5(3) == 2


def test_rationals():

    assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == Fraction(5, 6)
    assert unit_inverse(QQ(Fraction(2, 3))) == Fraction(3, 2)


def test_non_prime_modulus_rejected():

    with pytest.raises(RingMismatchError):
        BaseRing.prime_field(4)


def test_mixed_rings_rejected():

    with pytest.raises(RingMismatchError):
        ZZ(1) + GF(5)(1)


def test_integer_units():

    assert unit_inverse(ZZ(-1)) == -1
    with pytest.raises(NotInvertibleError):
        unit_inverse(ZZ(2))


def test_duplicate_variables_rejected():

    with pytest.raises(VariableError):
        ZZ.extend("x", "x")


def test_polynomial_coefficient_of_distinguished_variable():

    R = ZZ.extend("x", "t")
    x, t = R.gens()
    p = (x + t) ** 2
    lower = ZZ.extend("x")
    assert poly_coeff(p, 1) == lower.gen("x") * 2
    assert poly_coeff(p, 2) == lower.one


def test_extension_flattens_variables():

    assert ZZ.extend("x").extend("y") == ZZ.extend("x", "y")


def test_reduction_mod_p():

    h = RingHom.reduction(ZZ, 5)
    assert h(ZZ(7)) == GF(5)(2)
    assert h.verify(random.Random(0))


def test_polynomial_hom_substitutes_variables():

    R = ZZ.extend("x")
    h = RingHom(R, ZZ, {"x": ZZ(3)})
    x = R.gen("x")
    assert h(x**2 + x * 2 + 1) == 16


def test_determinant_and_char_coefficients():

    M = [[ZZ(1), ZZ(2)], [ZZ(3), ZZ(4)]]
    assert mx.det(M, ZZ) == -2
    assert mx.char_coefficients(M, ZZ) == [ZZ(1), ZZ(5), ZZ(-2)]


def test_berkowitz_on_plain_integers_matches():

    M = [[ZZ(1), ZZ(2)], [ZZ(3), ZZ(4)]]
    assert mx.berkowitz(M, ZZ.one) == [ZZ(1), ZZ(-5), ZZ(-2)]
    assert mx.generic_det(M, ZZ.one) == -2


def test_inverse_over_integers():

    M = [[ZZ(2), ZZ(1)], [ZZ(1), ZZ(1)]]
    assert mx.inverse(M, ZZ) == [[ZZ(1), ZZ(-1)], [ZZ(-1), ZZ(2)]]
    with pytest.raises(NotInvertibleError):
        mx.inverse([[ZZ(2), ZZ(0)], [ZZ(0), ZZ(1)]], ZZ)


def test_random_scalar_is_seeded():

    R = GF(7).extend("t")
    first = [random_scalar(R, random.Random(3)) for _ in range(3)]
    second = [random_scalar(R, random.Random(3)) for _ in range(3)]
    assert first == second


def test_constants_hash_as_numbers():

    Zt = ZZ.extend("t")
    counts = {2: "two", Fraction(1, 2): "half"}

    assert hash(ZZ(2)) == hash(2)
    assert counts[ZZ(2)] == counts[Zt(2)] == counts[GF(7)(9)] == "two"
    assert counts[QQ(Fraction(1, 2))] == "half"
    assert GF(5)(2) == 2
    assert GF(5)(2) != 7
    assert Zt.gen("t") != 0
    assert len({ZZ(3), 3}) == 1
