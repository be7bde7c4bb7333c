import random
from fractions import Fraction

import pytest

from syzygy.fields import (
    GF,
    QQ,
    MAX_PRIME,
    PrimeField,
    ZeroDenominator,
    ZeroInversion,
    field_from_spec,
    is_prime,
    mod_inverse,
    rational_normalize,
)


def test_mod_inverse_worked_values():
    assert mod_inverse(1, 10007) == 1
    # brute force over {1..4}: 2*3 = 6 = 1 mod 5
    assert mod_inverse(2, 5) == 3
    # extended gcd by hand: 3*3336 = 10008 = 1 mod 10007
    assert mod_inverse(3, 10007) == 3336
    assert 3 * 3336 % 10007 == 1


def test_mod_inverse_of_zero_raises():
    with pytest.raises(ZeroInversion):
        mod_inverse(0, 10007)
    with pytest.raises(ZeroInversion):
        GF(5).inv(0)
    with pytest.raises(ZeroInversion):
        QQ.inv(Fraction(0))


def test_all_inverses_small_field():
    F = GF(31)
    for a in range(1, 31):
        assert F.mul(a, F.inv(a)) == 1


def test_field_axioms_randomized():
    rng = random.Random(0)
    for field in (GF(10007), GF(5), QQ):
        for _ in range(200):
            a, b, c = (field.random(rng) for _ in range(3))
            assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
            assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
            assert field.mul(a, field.add(b, c)) == field.add(
                field.mul(a, b), field.mul(a, c)
            )
            assert field.add(a, field.neg(a)) == field.zero
            if a != field.zero:
                assert field.mul(a, field.inv(a)) == field.one


def test_rational_normalize():
    assert rational_normalize(2, 4) == Fraction(1, 2)
    assert rational_normalize(3, -6) == Fraction(-1, 2)
    r = rational_normalize(0, 7)
    assert r == 0 and r.denominator == 1
    with pytest.raises(ZeroDenominator):
        rational_normalize(1, 0)


def test_rational_sum_round_trip():
    rng = random.Random(1)
    for _ in range(100):
        a, c = rng.randrange(-50, 50), rng.randrange(-50, 50)
        b, d = rng.randrange(1, 50), rng.randrange(1, 50)
        lhs = rational_normalize(a * d + c * b, b * d)
        rhs = rational_normalize(a, b) + rational_normalize(c, d)
        assert lhs == rhs
        assert lhs.denominator > 0


def test_prime_checking():
    assert is_prime(2) and is_prime(10007) and is_prime(2**31 - 1)
    assert not is_prime(1) and not is_prime(10006) and not is_prime(10007 * 3)
    with pytest.raises(ValueError):
        PrimeField(10006)
    with pytest.raises(ValueError):
        PrimeField(MAX_PRIME + 100)


def test_field_from_spec():
    assert field_from_spec("q") is QQ
    assert field_from_spec("fp:10007") == GF(10007)
    with pytest.raises(ValueError):
        field_from_spec("gf64")
