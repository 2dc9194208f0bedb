# associated (second-order) Stirling numbers {{m, k}}: partitions of an m-set into k blocks of size >= 2

from __future__ import annotations

from fractions import Fraction

from .base import BaseTriangle


class AssociatedStirlingTriangle(BaseTriangle):
    rule = "stirling2assoc"
    integral = True
    first_row = 0

    def k_range(self, m: int) -> range:
        # {{m,k}} = 0 when m < 2k, and {{m,0}} = 0 for m > 0
        return range(0, 1) if m == 0 else range(1, m // 2 + 1)

    def _compute_row(self, m: int) -> list[Fraction]:
        if m == 0:
            return [Fraction(1)]
        return [k * self(m - 1, k) + (m - 1) * self(m - 2, k - 1) for k in self.k_range(m)]


_STIRLING2_ASSOC = AssociatedStirlingTriangle()


def stirling2_assoc(m: int, k: int) -> int:
    return int(_STIRLING2_ASSOC(m, k))
