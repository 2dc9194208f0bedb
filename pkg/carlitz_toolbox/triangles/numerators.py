# N(m,k) = g(m,k) (k!)^(m-k+1), integer numerators over the natural denominator of g

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError, IntegralityError
from ..exact_arith import factorial
from ..poly_algebra import PowerSeries
from .base import BaseTriangle
from .g_numbers import g_rec


def numerator_N_genfunc(m: int, k: int) -> int:
    """[z^(m-k)] prod_{p=1..k} 1/(1 - (k!/p) z)"""
    if not 1 <= k <= m:
        raise DomainError(f"N({m},{k}) needs 1 <= k <= m")
    order = m - k
    kf = factorial(k)
    product = PowerSeries.zeros(order) + 1
    for p in range(1, k + 1):
        product = product * PowerSeries(tuple((kf // p) ** j for j in range(order + 1)))
    return int(product[order])


def numerator_N(m: int, k: int) -> int:
    if not 1 <= k <= m:
        raise DomainError(f"N({m},{k}) needs 1 <= k <= m")
    scaled = g_rec(m, k) * factorial(k) ** (m - k + 1)
    if scaled.denominator != 1:
        raise IntegralityError(f"g({m},{k}) * ({k}!)^{m - k + 1} = {scaled} is not an integer")
    via_genfunc = numerator_N_genfunc(m, k)
    if scaled != via_genfunc:
        raise IntegralityError(f"N({m},{k}): scaled g gives {scaled}, generating function gives {via_genfunc}")
    return scaled.numerator


class NumeratorTriangle(BaseTriangle):
    rule = "N"
    integral = True

    def k_range(self, m: int) -> range:
        return range(1, m + 1)

    def _compute_row(self, m: int) -> list[Fraction]:
        return [Fraction(numerator_N(m, k)) for k in self.k_range(m)]
