# second-order Eulerian numbers <<m, k>>, the numerators of G_{-m}(lambda)

from __future__ import annotations

from fractions import Fraction

from .base import BaseTriangle


class Eulerian2Triangle(BaseTriangle):
    rule = "eulerian2"
    integral = True
    first_row = 0

    def k_range(self, m: int) -> range:
        return range(0, max(m, 1))

    def _compute_row(self, m: int) -> list[Fraction]:
        if m == 0:
            return [Fraction(1)]
        # <<m,k>> = (k+1) <<m-1,k>> + (2m-k-1) <<m-1,k-1>>
        return [(k + 1) * self(m - 1, k) + (2 * m - k - 1) * self(m - 1, k - 1) for k in self.k_range(m)]


_EULERIAN2 = Eulerian2Triangle()


def eulerian2(m: int, k: int) -> int:
    return int(_EULERIAN2(m, k))
