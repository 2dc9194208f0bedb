from fractions import Fraction

import pytest

from carlitz_toolbox.errors import DomainError
from carlitz_toolbox.exact_arith import (
    as_rational,
    binomial,
    double_factorial_odd,
    factorial,
    format_rational,
    superfactorial,
)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (5, 120), (10, 3628800)])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_negative():
    with pytest.raises(DomainError):
        factorial(-1)


@pytest.mark.parametrize(
    "n,k,expected",
    [
        (5, 2, 10),
        (2, 5, 0),
        (4, -1, 0),
        (0, 0, 1),
        # upper negation
        (-1, 0, 1),
        (-1, 3, -1),
        (-2, 2, 3),
        (-3, 2, 6),
    ],
)
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (3, 15), (5, 945)])
def test_double_factorial_odd(n, expected):
    assert double_factorial_odd(n) == expected


@pytest.mark.parametrize("m,expected", [(0, 1), (1, 1), (3, 12), (4, 288)])
def test_superfactorial(m, expected):
    assert superfactorial(m) == expected


def test_superfactorial_negative():
    with pytest.raises(DomainError):
        superfactorial(-2)


def test_rational_text():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(0) == "0"
    assert as_rational("3/6") == Fraction(1, 2)
