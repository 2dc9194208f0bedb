# g(m,k): G_m(lambda) = sum_k (-1)^(k-1) g(m,k) lambda^k for m >= 1.
# The recurrence is the definition; the four closed forms below are independent evaluations of it.

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement

from ..errors import DomainError
from ..exact_arith import binomial, factorial
from ..poly_algebra import Polynomial, PowerSeries
from .base import BaseTriangle


class GTriangle(BaseTriangle):
    rule = "g"

    def k_range(self, m: int) -> range:
        return range(1, m + 1)

    def _compute_row(self, m: int) -> list[Fraction]:
        if m == 1:
            return [Fraction(1)]
        # k g(m,k) = g(m-1,k) + g(m-1,k-1), g(m,1) = 1
        return [Fraction(1)] + [(self(m - 1, k) + self(m - 1, k - 1)) / k for k in range(2, m + 1)]


_G = GTriangle()


def _check_cell(m: int, k: int) -> None:
    if not 1 <= k <= m:
        raise DomainError(f"g({m},{k}) needs 1 <= k <= m")


def g_rec(m: int, k: int) -> Fraction:
    if m < 1:
        raise DomainError(f"g is defined for m >= 1, got m={m}")
    return _G(m, k)


def g_egyptian(m: int, k: int) -> Fraction:
    """(1/k!) * sum over 1 <= i_1 <= ... <= i_{m-k} <= k of 1/(i_1 ... i_{m-k})."""
    _check_cell(m, k)
    total = sum(
        (Fraction(1, math.prod(idx)) for idx in combinations_with_replacement(range(1, k + 1), m - k)), Fraction(0)
    )
    return total / factorial(k)


def g_difference(m: int, k: int) -> Fraction:
    """Iterated difference of 1/x^(m-k+1)."""
    _check_cell(m, k)
    d = m - k + 1
    total = sum((Fraction((-1) ** j * binomial(k - 1, j), (j + 1) ** d) for j in range(k)), Fraction(0))
    return total / factorial(k - 1)


def g_genfunc(m: int, k: int) -> Fraction:
    """[z^(m-k)] prod_{p=1..k} 1/(p - z)."""
    _check_cell(m, k)
    order = m - k
    product = PowerSeries.zeros(order) + 1
    for p in range(1, k + 1):
        # 1/(p - z) = sum_j z^j / p^(j+1)
        product = product * PowerSeries(tuple(Fraction(1, p ** (j + 1)) for j in range(order + 1)))
    return product[order]


def g_hypercube(m: int, k: int) -> Fraction:
    """(1/(k-1)!) * integral over [0,1]^d of (1 - x_1...x_d)^(k-1), d = m-k+1."""
    _check_cell(m, k)
    d = m - k + 1
    integrand = Polynomial("u", (1, -1)) ** (k - 1)
    # u = x_1...x_d and u^j integrates to 1/(j+1)^d over the unit cube
    total = sum((c / (j + 1) ** d for j, c in enumerate(integrand.coeffs)), Fraction(0))
    return total / factorial(k - 1)


def virtual_stirling(neg_k: int, n: int) -> Fraction:
    """s(-k, n) = (-1)^k g(n+k, k)."""
    if neg_k >= 0 or n < 0:
        raise DomainError(f"virtual Stirling view needs a negative first index and n >= 0, got ({neg_k}, {n})")
    k = -neg_k
    return (-1) ** k * _G(n + k, k)


def gen_bernoulli_neg(m: int, k: int) -> Fraction:
    """B_{-m}^{(-k)} = -g(m,k) / C(m-1,k)."""
    if not 1 <= k <= m - 1:
        raise DomainError(f"generalized Bernoulli view needs 1 <= k <= m-1, got ({m}, {k})")
    return -_G(m, k) / binomial(m - 1, k)


def connection_series(k: int, order: int) -> bool:
    """1/((x+1)...(x+k)) = sum_n (-1)^n g(k+n, k) x^n through x^order."""
    assert k >= 1 and order >= 0
    product = PowerSeries.zeros(order) + 1
    for p in range(1, k + 1):
        # 1/(p + x) = (1/p) sum_j (-x/p)^j
        product = product * PowerSeries(tuple(Fraction((-1) ** j, p ** (j + 1)) for j in range(order + 1)))
    return all(product[n] == (-1) ** n * _G(k + n, k) for n in range(order + 1))
