from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError


__all__ = [
    "ExactRational",
    "as_rational",
    "format_rational",
    "factorial",
    "binomial",
    "double_factorial_odd",
    "superfactorial",
]


# Fraction is normalised on construction: lowest terms, positive denominator, 0 == 0/1
ExactRational = Fraction


def as_rational(x: int | str | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(x: Fraction | int) -> str:
    """Canonical text form: "p/q", "p" when q == 1, sign on the numerator only."""
    return str(as_rational(x))


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial is undefined for n={n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for any integers. 0 when k < 0, otherwise n(n-1)...(n-k+1)/k!, so negative n is allowed."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # upper negation: C(n, k) = (-1)^k C(k-n-1, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*5*...*(2n-1), with (2*0-1)!! = 1."""
    if n < 0:
        raise DomainError(f"double_factorial_odd is undefined for n={n}")
    return math.prod(range(1, 2 * n, 2))


def superfactorial(m: int) -> int:
    """1! * 2! * ... * m!"""
    if m < 0:
        raise DomainError(f"superfactorial is undefined for m={m}")
    return math.prod(math.factorial(i) for i in range(1, m + 1))
