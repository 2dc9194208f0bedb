# Quantitative laws of the h triangle: the alternating row sum, the diagonal limit 1/e, the two integrality
# scalings, and the polynomial asymptote of (k-1)! h(m,k) read off exact forward differences.

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from mpmath import mp

from .errors import DomainError
from .exact_arith import double_factorial_odd, factorial, superfactorial
from .poly_algebra import Polynomial
from .triangles import eulerian2, h_rec


__all__ = [
    "AlternatingSum",
    "alternating_sum_h",
    "DiagonalTrend",
    "diag_limit_trend",
    "integrality_check",
    "eulerian2_rowsum_check",
    "forward_differences",
    "kth_differences",
    "AsymptoticReport",
    "asym_fit",
]


logger = logging.getLogger(__name__)

# working precision for every decimal report
DECIMAL_DIGITS = 40
DEFAULT_TOLERANCE = Fraction(1, 10**6)
DEFAULT_SHIFT = 3
DEFAULT_WINDOW = 8


def to_decimal(x: Fraction):
    with mp.workdps(DECIMAL_DIGITS):
        return mp.mpf(x.numerator) / x.denominator


def format_decimal(x: Fraction, digits: int = 12) -> str:
    return mp.nstr(to_decimal(x), digits)


class AlternatingSum(NamedTuple):
    value: Fraction
    ok: bool


def alternating_sum_h(m: int) -> AlternatingSum:
    """sum_j (-1)^(j-1) h(m,j), compared against 1/m!."""
    if m < 1:
        raise DomainError(f"alternating sum needs m >= 1, got {m}")
    value = sum(((-1) ** (j - 1) * h_rec(m, j) for j in range(1, m + 1)), Fraction(0))
    return AlternatingSum(value, value == Fraction(1, factorial(m)))


@dataclass
class DiagonalTrend:
    rows: list[tuple[int, Fraction, object]]  # (m, h(m,m), |h(m,m) - 1/e| as mpf)
    decreasing: bool
    digits: int = DECIMAL_DIGITS

    def to_text(self) -> str:
        lines = [f"# |h(m,m) - 1/e| at {self.digits} significant digits"]
        lines += [f"{m:>4}  {format_decimal(h, 15):<20}  {mp.nstr(gap, 15)}" for m, h, gap in self.rows]
        lines.append(f"strictly decreasing: {'yes' if self.decreasing else 'no'}")
        return "\n".join(lines) + "\n"


def diag_limit_trend(M: int) -> DiagonalTrend:
    if M < 2:
        raise DomainError(f"diagonal trend needs M >= 2, got {M}")
    rows = []
    with mp.workdps(DECIMAL_DIGITS):
        inv_e = 1 / mp.e
        for m in range(2, M + 1):
            h = h_rec(m, m)
            rows.append((m, h, abs(mp.mpf(h.numerator) / h.denominator - inv_e)))
        decreasing = all(b[2] < a[2] for a, b in zip(rows, rows[1:]))
    logger.debug("diagonal gap at m=%d: %s", M, mp.nstr(rows[-1][2], 8))
    return DiagonalTrend(rows, decreasing)


def integrality_check(m: int) -> bool:
    """1!2!...m! h(m,k) and (1!2!...k!)^(m-k+1) h(m,k) are integers for every k."""
    if m < 1:
        raise DomainError(f"integrality check needs m >= 1, got {m}")
    sf_m = superfactorial(m)
    for k in range(1, m + 1):
        h = h_rec(m, k)
        if (sf_m * h).denominator != 1 or (superfactorial(k) ** (m - k + 1) * h).denominator != 1:
            logger.info("integrality fails at h(%d,%d) = %s", m, k, h)
            return False
    return True


def eulerian2_rowsum_check(n: int) -> bool:
    """sum_k <<n,k>> == (2n-1)!!"""
    if n < 1:
        raise DomainError(f"row sum check needs n >= 1, got {n}")
    return sum(eulerian2(n, k) for k in range(n)) == double_factorial_odd(n)


def forward_differences(values: list[Fraction]) -> list[list[Fraction]]:
    """Row 0 is the input, row j holds the j-th forward differences (length len(values) - j)."""
    table = [list(values)]
    while len(table[-1]) > 1:
        prev = table[-1]
        table.append([b - a for a, b in zip(prev, prev[1:])])
    return table


def _scaled_h(m: int, k: int) -> Fraction:
    return factorial(k - 1) * h_rec(m, k)


def kth_differences(k: int, m_min: int, m_max: int) -> list[Fraction]:
    """k-th forward differences of (k-1)! h(m,k) for m in [m_min, m_max]."""
    if k < 1 or m_min < k or m_max - m_min < k:
        raise DomainError(f"need k >= 1 and k <= m_min <= m_max - k, got k={k}, m in [{m_min}, {m_max}]")
    table = forward_differences([_scaled_h(m, k) for m in range(m_min, m_max + 1)])
    return table[k]


def _binomial_poly(a: int, j: int) -> Polynomial:
    """C(m - a, j) as a polynomial in m."""
    out = Polynomial.constant("m", 1)
    for i in range(j):
        out = out * Polynomial("m", (-a - i, 1))
    return out * Fraction(1, factorial(j))


def _shift_label(shift: int) -> str:
    if shift == 0:
        return "m"
    return f"(m-{shift})" if shift > 0 else f"(m+{-shift})"


def _taylor_shift(p: Polynomial, shift: int) -> Polynomial:
    """Re-express p(m) in powers of (m - shift)."""
    t = Polynomial("t", (shift, 1))
    out = Polynomial("t")
    for i, c in enumerate(p.coeffs):
        out = out + t**i * c
    return Polynomial(_shift_label(shift), out.coeffs)


@dataclass
class AsymptoticReport:
    k: int
    m_range: tuple[int, int]
    scaled_values: list[Fraction]
    difference_table: list[list[Fraction]]
    newton_anchor: int
    newton_coeffs: list[Fraction]
    stabilized: bool
    tolerance: Fraction
    shift: int = DEFAULT_SHIFT
    fitted_newton: list[int] | None = None
    fitted_polynomial: Polynomial | None = None
    shifted_polynomial: Polynomial | None = None

    def to_dict(self) -> dict:
        out = dict(
            k=self.k,
            m_range=list(self.m_range),
            scale=f"{self.k - 1}!",
            scaled_values=[str(v) for v in self.scaled_values],
            difference_table=[[str(v) for v in row] for row in self.difference_table],
            newton_anchor=self.newton_anchor,
            newton_coeffs=[str(c) for c in self.newton_coeffs],
            stabilized=self.stabilized,
            tolerance=str(self.tolerance),
            shift=self.shift,
            fitted_newton=self.fitted_newton,
            fitted_polynomial=None,
            shifted_polynomial=None,
        )
        if self.fitted_polynomial is not None:
            out["fitted_polynomial"] = dict(
                text=str(self.fitted_polynomial), coeffs=[str(c) for c in self.fitted_polynomial.coeffs]
            )
            out["shifted_polynomial"] = dict(
                text=str(self.shifted_polynomial),
                variable=self.shifted_polynomial.variable,
                coeffs=[str(c) for c in self.shifted_polynomial.coeffs],
            )
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lo, hi = self.m_range
        lines = [
            f"# ({self.k - 1})! h(m,{self.k}) for m in [{lo}, {hi}], decimals at {DECIMAL_DIGITS} digits working precision"
        ]
        for j, row in enumerate(self.difference_table):
            cells = " ".join(f"{format_decimal(v, 10):>18}" for v in row)
            lines.append(f"d{j:<2} {cells}")
        newton = " ".join(str(c) for c in self.newton_coeffs)
        lines.append(f"newton coefficients at m={self.newton_anchor}: {newton}")
        lines.append(f"stabilized (tolerance {self.tolerance}): {'yes' if self.stabilized else 'no'}")
        if self.fitted_polynomial is not None:
            terms = "+".join(f"{c}*C(m-{self.newton_anchor},{j})" for j, c in enumerate(self.fitted_newton))
            lines.append(f"newton form: {terms}")
            lines.append(f"p_{self.k}(m) = {self.fitted_polynomial}")
            lines.append(f"p_{self.k}(m) = {self.shifted_polynomial}")
        return "\n".join(lines) + "\n"


def asym_fit(
    k: int,
    M: int,
    tolerance: Fraction = DEFAULT_TOLERANCE,
    shift: int = DEFAULT_SHIFT,
    window: int = DEFAULT_WINDOW,
) -> AsymptoticReport:
    """Fit the degree k-1 polynomial that (k-1)! h(m,k) approaches, from m in [M - window, M]."""
    if k < 2:
        raise DomainError(f"h(m,{k}) is identically 1 for k = 1, there is nothing to fit; use k >= 2")
    if window < k:
        raise DomainError(f"window {window} is too short for a degree {k - 1} fit")
    if M < k + window:
        raise DomainError(f"M must be at least k + {window} = {k + window}, got {M}")
    tolerance = Fraction(tolerance)

    lo = M - window
    values = [_scaled_h(m, k) for m in range(lo, M + 1)]
    table = forward_differences(values)

    # interpolate through the last k points, Newton form anchored at the first of them
    anchor = M - k + 1
    newton = [table[j][anchor - lo] for j in range(k)]
    rounded = [round(c) for c in newton]
    residual = max(abs(c - r) for c, r in zip(newton, rounded))
    stabilized = abs(table[k][-1]) < tolerance and residual < tolerance
    logger.info("asym k=%d M=%d: last k-th difference %s, stabilized=%s", k, M, format_decimal(table[k][-1], 6), stabilized)

    report = AsymptoticReport(
        k=k,
        m_range=(lo, M),
        scaled_values=values,
        difference_table=table,
        newton_anchor=anchor,
        newton_coeffs=newton,
        stabilized=stabilized,
        tolerance=tolerance,
        shift=shift,
    )
    if stabilized:
        poly = Polynomial("m")
        for j, c in enumerate(rounded):
            poly = poly + _binomial_poly(anchor, j) * c
        report.fitted_newton = rounded
        report.fitted_polynomial = poly
        report.shifted_polynomial = _taylor_shift(poly, shift)
    return report
