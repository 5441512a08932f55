import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rbtrunc.fields import (
    QQ,
    FieldElement,
    FieldMismatchError,
    PrimeField,
    add,
    inv,
    is_prime,
    mul,
    neg,
    parse_field,
)

F3 = PrimeField(3)
FIELDS = [QQ, F3, PrimeField(5), PrimeField(101)]


def rand_elem(F, rng):
    if F == QQ:
        return FieldElement(F, Fraction(rng.randint(-50, 50), rng.randint(1, 50)))
    return FieldElement(F, rng.randrange(F.p))


def test_rational_add():
    assert add(QQ.element(Fraction(1, 2)), QQ.element(Fraction(1, 3))) == QQ.element(Fraction(5, 6))


def test_prime_add_reduces():
    assert add(F3.element(2), F3.element(2)) == F3.element(1)
    assert add(F3.element(2), F3.element(2)).value == 1


def test_additive_identity():
    for F in FIELDS:
        a = F.element(7)
        assert add(a, F.element(0)) == a


def test_inverses():
    assert inv(F3.element(2)) == F3.element(2)
    assert inv(QQ.element(Fraction(2, 3))) == QQ.element(Fraction(3, 2))
    a = QQ.element(Fraction(-7, 4))
    assert mul(a, QQ.element(1)) == a


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        inv(QQ.element(0))
    with pytest.raises(ZeroDivisionError):
        inv(F3.element(3))


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        add(QQ.element(1), F3.element(1))
    with pytest.raises(FieldMismatchError):
        mul(F3.element(1), PrimeField(5).element(1))
    with pytest.raises(FieldMismatchError):
        F3.element(1) + PrimeField(5).element(1)


def test_canonical_forms():
    x = QQ.element(Fraction(6, -4))
    assert x.value.numerator == -3 and x.value.denominator == 2
    assert F3.element(-1).value == 2
    assert F3.element(10).value == 1


@pytest.mark.parametrize("p", [2, 1, 0, 4, 9, 15])
def test_bad_characteristic(p):
    with pytest.raises(ValueError):
        PrimeField(p)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_field_axioms_random(F):
    rng = random.Random(1234)
    one, zero = F.element(1), F.element(0)
    for _ in range(1000):
        a, b, c = (rand_elem(F, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + neg(a) == zero
        if a:
            assert a * inv(a) == one
            assert inv(inv(a)) == a


@given(st.integers(), st.integers(), st.sampled_from([3, 5, 7, 101, 65537]))
def test_prime_matches_integer_arithmetic(x, y, p):
    F = PrimeField(p)
    assert (F.element(x) + F.element(y)).value == (x + y) % p
    assert (F.element(x) * F.element(y)).value == (x * y) % p


@given(st.fractions(), st.fractions())
def test_rationals_stay_in_lowest_terms(x, y):
    for z in (QQ.element(x) + QQ.element(y), QQ.element(x) * QQ.element(y)):
        assert z.value.denominator > 0
        assert Fraction(z.value.numerator, z.value.denominator) == z.value


@pytest.mark.parametrize(
    "text,F,expected",
    [
        ("7", QQ, Fraction(7)),
        ("-3", QQ, Fraction(-3)),
        ("1/2", QQ, Fraction(1, 2)),
        (" -4/6 ", QQ, Fraction(-2, 3)),
        ("-1", F3, 2),
        ("1/2", F3, 2),
        ("5", F3, 2),
    ],
)
def test_parse_scalars(text, F, expected):
    assert F.coerce(text) == expected


@pytest.mark.parametrize("text", ["1.5", "a", "1/0", "1/-2", "", "1/2/3"])
def test_parse_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        QQ.coerce(text)


def test_format_round_trip():
    for v in [Fraction(0), Fraction(5), Fraction(-7, 3)]:
        assert QQ.coerce(QQ.format(v)) == v
    assert F3.format(2) == 2


def test_parse_field():
    assert parse_field("rational") == QQ
    assert parse_field({"prime": 3}) == F3
    assert parse_field("5") == PrimeField(5)
    assert parse_field("GF7") == PrimeField(7)
    with pytest.raises(ValueError):
        parse_field({"prime": 2})
    with pytest.raises(ValueError):
        parse_field("reals")


def test_is_prime():
    assert [k for k in range(30) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
