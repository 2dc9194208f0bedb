# h(m,k): H_m(zeta) = (1+zeta)^(-m) sum_k h(m,k) zeta^k for m >= 1

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError
from ..exact_arith import binomial
from .base import BaseTriangle
from .g_numbers import g_rec


class HTriangle(BaseTriangle):
    rule = "h"

    def k_range(self, m: int) -> range:
        return range(1, m + 1)

    def _compute_row(self, m: int) -> list[Fraction]:
        if m == 1:
            return [Fraction(1)]
        # k h(m,k) = h(m-1,k) + (m-k+1) h(m,k-1), h(m,0) = 0
        row = []
        prev = Fraction(0)
        for k in self.k_range(m):
            prev = (self(m - 1, k) + (m - k + 1) * prev) / k
            row.append(prev)
        return row


_H = HTriangle()


def h_rec(m: int, k: int) -> Fraction:
    if m < 1:
        raise DomainError(f"h is defined for m >= 1, got m={m}")
    return _H(m, k)


def h_from_g(m: int, k: int) -> Fraction:
    """sum_{j=1..k} (-1)^(j-1) C(m-j, k-j) g(m,j)"""
    if not 1 <= k <= m:
        raise DomainError(f"h({m},{k}) needs 1 <= k <= m")
    return sum(((-1) ** (j - 1) * binomial(m - j, k - j) * g_rec(m, j) for j in range(1, k + 1)), Fraction(0))
