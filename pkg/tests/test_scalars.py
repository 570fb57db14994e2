import math
import random
from fractions import Fraction

import pytest

from asx.errors import MixedScalars
from asx.scalars import (
    QuadraticNumber,
    as_exact,
    exact_sqrt,
    format_scalar,
    scalar_sign,
    square_free_split,
)


@pytest.mark.parametrize(
    "n, expected",
    [(1, (1, 1)), (4, (2, 1)), (12, (2, 3)), (84, (2, 21)), (5184, (72, 1)), (297, (3, 33))],
)
def test_square_free_split(n, expected):
    assert square_free_split(n) == expected


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    r = exact_sqrt(Fraction(28, 3))
    assert r == QuadraticNumber(0, Fraction(2, 3), 21)
    assert exact_sqrt(0) == 0
    with pytest.raises(ValueError):
        exact_sqrt(-1)


def test_radicand_normalization():
    x = QuadraticNumber(1, Fraction(1, 2), 12)  # sqrt(12) = 2 sqrt(3)
    assert x == QuadraticNumber(1, 1, 3)
    assert x.radicand == 3
    y = QuadraticNumber(2, 3, 4)  # sqrt(4) = 2 is rational
    assert y.is_rational and y.as_fraction() == 8


def test_equality_is_structural():
    a = QuadraticNumber(Fraction(1, 2), Fraction(1, 3), 5)
    b = QuadraticNumber(Fraction(1, 2), Fraction(1, 3), 5)
    c = QuadraticNumber(Fraction(1, 2), Fraction(2, 3), 5)
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert QuadraticNumber(Fraction(3, 2)) == Fraction(3, 2)


def test_field_arithmetic():
    x = QuadraticNumber(1, 1, 2)
    assert x * x == QuadraticNumber(3, 2, 2)
    assert (x - 1) * (x - 1) == QuadraticNumber(2)  # (sqrt 2)^2
    assert x / x == 1
    inv = 1 / x
    assert x * inv == 1
    assert x ** 3 == QuadraticNumber(7, 5, 2)
    with pytest.raises(ZeroDivisionError):
        x / QuadraticNumber(0)


def test_mixed_radicands_refuse_to_combine():
    with pytest.raises(MixedScalars):
        QuadraticNumber(0, 1, 2) + QuadraticNumber(0, 1, 3)
    with pytest.raises(MixedScalars):
        QuadraticNumber(1, 1, 5) * QuadraticNumber(1, 1, 7)


@pytest.mark.parametrize(
    "x, sign",
    [
        (QuadraticNumber(0), 0),
        (QuadraticNumber(-2, Fraction(1, 3), 21), -1),  # 4 > 21/9, rational part wins
        (QuadraticNumber(1, Fraction(2, 3), 21), 1),
        (QuadraticNumber(-1, 1, 2), 1),   # sqrt(2) > 1
        (QuadraticNumber(2, -1, 2), 1),   # 2 > sqrt(2)
        (QuadraticNumber(1, -1, 2), -1),  # 1 < sqrt(2)
        (Fraction(-3, 7), -1),
        (0, 0),
    ],
)
def test_scalar_sign(x, sign):
    assert scalar_sign(x) == sign


def test_sign_matches_float_on_random_values():
    # sanity cross-check only: the sign itself is computed exactly
    rng = random.Random(20240817)
    for _ in range(1000):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 40))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 40))
        d = rng.choice([2, 3, 5, 7, 21, 33])
        x = QuadraticNumber(a, b, d)
        approx = float(a) + float(b) * math.sqrt(d)
        if abs(approx) > 1e-9:
            assert scalar_sign(x) == (1 if approx > 0 else -1)


def test_total_order_and_conjugate():
    xs = [QuadraticNumber(0, 1, 2), QuadraticNumber(1), QuadraticNumber(0, -1, 2), Fraction(3, 2)]
    assert sorted(xs) == [xs[2], xs[1], xs[0], Fraction(3, 2)]  # sqrt 2 < 3/2
    y = QuadraticNumber(2, -3, 5)
    assert y.conjugate() == QuadraticNumber(2, 3, 5)
    assert y + y.conjugate() == 4


def test_as_exact_and_format():
    assert as_exact(QuadraticNumber(Fraction(5, 3))) == Fraction(5, 3)
    assert format_scalar(Fraction(72, 7)) == "72/7"
    assert format_scalar(QuadraticNumber(-2, Fraction(1, 3), 21)) == "-2+1/3*sqrt(21)"
    assert format_scalar(QuadraticNumber(0, -1, 5)) == "-sqrt(5)"
