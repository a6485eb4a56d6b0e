import random
from fractions import Fraction

import pytest

from waring.cyclotomic import (
    CyclotomicNumber,
    DivisibilityError,
    cyclotomic_embed,
    cyclotomic_polynomial,
    euler_phi,
)


def test_cyclotomic_polynomial_small_orders():
    assert cyclotomic_polynomial(1) == (-1, 1)            # x - 1
    assert cyclotomic_polynomial(2) == (1, 1)             # x + 1
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)          # x^2 + 1
    assert cyclotomic_polynomial(6) == (1, -1, 1)         # x^2 - x + 1
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_polynomial_degrees_are_euler_phi():
    # phi via direct gcd counting, independent of the division recurrence
    from math import gcd
    for n in range(1, 31):
        phi = sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
        assert euler_phi(n) == phi


def test_embed_square_root_of_unity():
    assert cyclotomic_embed(2, 1, 2) == -1


def test_embed_identity_case():
    assert cyclotomic_embed(3, 0, 3) == 1


def test_embed_cube_root():
    z3 = cyclotomic_embed(3, 1, 3)
    # in Q[z]/(z^2+z+1): z^2 = -1 - z, z^3 = 1
    assert z3.coeffs == (Fraction(0), Fraction(1))
    assert z3 * z3 == CyclotomicNumber(3, [-1, -1])
    assert z3 ** 3 == 1


def test_embed_requires_divisibility():
    with pytest.raises(DivisibilityError):
        cyclotomic_embed(3, 1, 4)


@pytest.mark.parametrize("n", range(1, 25))
def test_roots_of_unity_cycle_and_are_distinct(n):
    values = [cyclotomic_embed(n, k, n) for k in range(n)]
    for v in values:
        assert v ** n == 1
    for i in range(n):
        for j in range(i + 1, n):
            assert values[i] != values[j]


def _random_element(rng, order):
    deg = euler_phi(order)
    return CyclotomicNumber(
        order, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg)])


def test_field_axioms_random_sampling():
    rng = random.Random(42)
    for order in (1, 3, 4, 5, 6, 8, 12):
        for _ in range(10):
            a, b, c = (_random_element(rng, order) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a * b == b * a
            if a:
                assert a * a.inverse() == 1


def test_mixed_order_arithmetic_promotes():
    z3 = cyclotomic_embed(3, 1, 3)
    z4 = cyclotomic_embed(4, 1, 4)
    prod = z3 * z4
    assert prod.order == 12
    assert prod ** 12 == 1
    assert prod ** 6 != 1


def test_equality_across_fields():
    minus_one_in_2 = cyclotomic_embed(2, 1, 2)
    minus_one_in_6 = cyclotomic_embed(2, 1, 6)
    assert minus_one_in_2 == minus_one_in_6
    assert minus_one_in_6.is_rational()
    assert minus_one_in_6.rational_value() == -1


def test_rational_value_raises_on_irrational():
    with pytest.raises(ValueError):
        cyclotomic_embed(3, 1, 3).rational_value()


def test_division_and_powers():
    z5 = cyclotomic_embed(5, 1, 5)
    assert (1 / z5) == z5 ** 4
    assert z5 ** -2 == z5 ** 3
    assert (z5 + 1) / (z5 + 1) == 1


def test_immutable():
    z = cyclotomic_embed(3, 1, 3)
    with pytest.raises(AttributeError):
        z.order = 5
