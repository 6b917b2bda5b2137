"""Field arithmetic in Q and in simple extensions."""

import random
from fractions import Fraction

import pytest

from qhc.errors import InputError
from qhc.field import QQ, FieldElement, NumberField, element_from_json

Q_I = NumberField((1, 0, 1))  # Q[a]/(a^2 + 1)


def test_rational_addition():
    x = QQ.from_rational(Fraction(1, 2))
    y = QQ.from_rational(Fraction(1, 3))
    assert (x + y).as_rational() == Fraction(5, 6)


def test_generator_square_reduces_modulo_min_poly():
    a = Q_I.generator()
    assert a * a == Q_I.from_rational(-1)


def test_extension_inverse_by_euclid():
    # inv(1 + a) = (1 - a)/2, confirmed by multiplying back to 1.
    x = Q_I.element([1, 1])
    inv = x.inv()
    assert inv == Q_I.element([Fraction(1, 2), Fraction(-1, 2)])
    assert x * inv == Q_I.one()


def test_inversion_of_zero_rejected():
    with pytest.raises(InputError):
        QQ.zero().inv()


def test_zero_divisor_detected_for_reducible_min_poly():
    # a^2 - 1 is reducible; 1 + a is a zero divisor.
    fld = NumberField((-1, 0, 1))
    with pytest.raises(InputError, match="zero divisor"):
        fld.element([1, 1]).inv()


def test_mismatched_field_contexts_rejected():
    with pytest.raises(InputError):
        QQ.one() + Q_I.one()


def test_min_poly_must_be_monic():
    with pytest.raises(InputError):
        NumberField((1, 2))


def test_powers_and_negative_exponents():
    a = Q_I.generator()
    assert a ** 4 == Q_I.one()
    assert a ** -1 == -a
    x = QQ.from_rational(Fraction(2, 3))
    assert (x ** -2).as_rational() == Fraction(9, 4)


def test_rationality_predicates():
    a = Q_I.generator()
    assert not a.is_rational()
    with pytest.raises(InputError):
        a.as_rational()
    assert Q_I.from_rational(Fraction(7, 2)).as_rational() == Fraction(7, 2)


def test_json_round_trip():
    x = Q_I.element([Fraction(3, 4), Fraction(-5, 7)])
    assert element_from_json(Q_I, x.to_json()) == x
    y = QQ.from_rational(Fraction(-2, 9))
    assert element_from_json(QQ, y.to_json()) == y
    assert element_from_json(QQ, "3/5") == QQ.from_rational(Fraction(3, 5))


def _random_element(rng, fld):
    return FieldElement(
        fld,
        tuple(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            for _ in range(fld.degree)
        ),
    )


@pytest.mark.parametrize("fld", [QQ, Q_I, NumberField((1, 0, 0, 0, 1))])
def test_field_axioms_on_random_samples(fld):
    rng = random.Random(7)
    one = fld.one()
    for _ in range(200):
        x, y, z = (_random_element(rng, fld) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * x.inv() == one
        assert x + (-x) == fld.zero()
        assert x * one == x
