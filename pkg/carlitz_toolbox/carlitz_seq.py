# The bilateral sequence G_m(lambda) = H_m(zeta) = sum_{n>=1} n^(n-m) z^n / n!
#
# m >= 1 is reached from G_1 = lambda by the weighted integral, m <= 0 by the Carlitz operator
# (lambda/(1-lambda)) d/dlambda. zeta forms are pulled back through lambda = zeta/(1+zeta).

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import BoundExceededError, CanonicalFormError, DomainError
from .poly_algebra import LAMBDA, ZETA, Polynomial, RationalFunction, base_polynomial, mobius_substitute
from .triangles import eulerian2, g_rec, h_rec, stirling2_assoc


__all__ = [
    "SequenceEntry",
    "CoefficientRow",
    "G_1",
    "carlitz_lambda",
    "carlitz_zeta",
    "apply_integral_operator",
    "apply_diff_operator_lambda",
    "apply_diff_operator_zeta",
    "closed_form",
    "CarlitzSequence",
    "build",
    "extract_row",
    "render_form",
    "render_entry",
    "entry_to_dict",
]


logger = logging.getLogger(__name__)

DEFAULT_BOUND = 64


@dataclass(frozen=True)
class SequenceEntry:
    m: int
    lambda_form: RationalFunction
    zeta_form: RationalFunction

    def form(self, variable: str) -> RationalFunction:
        if variable not in (LAMBDA, ZETA):
            raise DomainError(f"unknown variable {variable!r}")
        return self.lambda_form if variable == LAMBDA else self.zeta_form


class CoefficientRow(NamedTuple):
    rule: str
    m: int
    values: list[Fraction]


def _from_lambda(m: int, lambda_form: RationalFunction) -> SequenceEntry:
    return SequenceEntry(m, lambda_form, mobius_substitute(lambda_form, "lambda->zeta"))


G_1 = _from_lambda(1, RationalFunction.from_coeffs(LAMBDA, (0, 1)))


def carlitz_lambda(f: RationalFunction) -> RationalFunction:
    """(lambda / (1-lambda)) f'"""
    assert f.variable == LAMBDA
    return f.carlitz_operator()


def carlitz_zeta(f: RationalFunction) -> RationalFunction:
    """zeta (1+zeta)^2 f'"""
    assert f.variable == ZETA
    return f.carlitz_operator()


def apply_integral_operator(entry: SequenceEntry) -> SequenceEntry:
    if entry.m < 1 or not entry.lambda_form.is_polynomial():
        raise DomainError(f"integral operator is applied to polynomial G_m with m >= 1, got m={entry.m}")
    return _from_lambda(entry.m + 1, RationalFunction(entry.lambda_form.numerator.weighted_integral()))


def apply_diff_operator_lambda(entry: SequenceEntry) -> SequenceEntry:
    return _from_lambda(entry.m - 1, carlitz_lambda(entry.lambda_form))


def apply_diff_operator_zeta(entry: SequenceEntry) -> SequenceEntry:
    zeta_form = carlitz_zeta(entry.zeta_form)
    return SequenceEntry(entry.m - 1, mobius_substitute(zeta_form, "zeta->lambda"), zeta_form)


def closed_form(m: int) -> SequenceEntry:
    """G_m and H_m assembled directly from the triangles."""
    if m >= 1:
        g_coeffs = [0] + [(-1) ** (k - 1) * g_rec(m, k) for k in range(1, m + 1)]
        h_coeffs = [0] + [h_rec(m, k) for k in range(1, m + 1)]
        return SequenceEntry(
            m, RationalFunction.from_coeffs(LAMBDA, g_coeffs), RationalFunction.from_coeffs(ZETA, h_coeffs, m)
        )
    if m == 0:
        return SequenceEntry(0, RationalFunction.from_coeffs(LAMBDA, (0, 1), 1), RationalFunction.from_coeffs(ZETA, (0, 1)))

    n = -m
    e_coeffs = [0] + [eulerian2(n, k) for k in range(n)]
    s_coeffs = [0] + [stirling2_assoc(n + k, k) for k in range(1, n + 1)]
    zeta_form = RationalFunction(Polynomial(ZETA, tuple(s_coeffs)) * base_polynomial(ZETA) ** (n + 1))
    return SequenceEntry(m, RationalFunction.from_coeffs(LAMBDA, e_coeffs, 2 * n + 1), zeta_form)


class CarlitzSequence:
    """Store of built entries. Writes are serialised, built entries are immutable."""

    def __init__(self, bound: int = DEFAULT_BOUND) -> None:
        self.bound = bound
        self._entries = {1: G_1}
        self._lock = threading.RLock()

    def build(self, m: int) -> SequenceEntry:
        if abs(m) > self.bound:
            raise BoundExceededError(f"|m| = {abs(m)} exceeds the sequence bound {self.bound}")
        if m not in self._entries:
            with self._lock:
                self._extend_to(m)
        return self._entries[m]

    def _extend_to(self, m: int) -> None:
        if m >= 1:
            cur = max(i for i in self._entries if 1 <= i <= m)
            step, apply = 1, apply_integral_operator
        else:
            cur = min(i for i in self._entries if m <= i <= 1)
            step, apply = -1, apply_diff_operator_lambda

        entry = self._entries[cur]
        while cur != m:
            entry = apply(entry)
            cur += step
            expected = closed_form(cur)
            if entry != expected:
                raise CanonicalFormError(f"operator-built G_{cur} disagrees with its closed form")
            self._entries[cur] = entry
            logger.debug("built G_%d: %s", cur, entry.lambda_form)

    def entries(self, m_min: int, m_max: int) -> list[SequenceEntry]:
        return [self.build(m) for m in range(m_min, m_max + 1)]


_DEFAULT_SEQUENCE = CarlitzSequence()


def build(m: int, sequence: CarlitzSequence | None = None) -> SequenceEntry:
    return (sequence or _DEFAULT_SEQUENCE).build(m)


def _strip_zeta_factors(num: Polynomial, n: int) -> Polynomial:
    """Remove the zeta (1+zeta)^(n+1) factor of H_{-n}."""
    if num[0] != 0:
        raise CanonicalFormError(f"H_{-n} numerator has a nonzero constant term")
    inner = Polynomial(ZETA, num.coeffs[1:])
    for _ in range(n + 1):
        inner, rem = inner.divide_linear(-1)
        if rem != 0:
            raise CanonicalFormError(f"H_{-n} is not divisible by (1+zeta)^{n + 1}")
    return inner


def _check_shape(ok: bool, variable: str, m: int) -> None:
    if not ok:
        raise CanonicalFormError(f"{variable} form of m={m} does not have the expected shape")


def extract_row(entry: SequenceEntry, variable: str = LAMBDA) -> CoefficientRow:
    """Read the triangle row out of a canonical form and check it against the triangle."""
    form = entry.form(variable)
    m = entry.m
    if not form.is_canonical():
        raise CanonicalFormError(f"{variable} form of m={m} is not in lowest terms")
    num = form.numerator

    if variable == LAMBDA and m >= 1:
        # sum_k (-1)^(k-1) g(m,k) lambda^k
        _check_shape(form.power == 0 and num[0] == 0 and num.degree == m, variable, m)
        rule = "g"
        values = [(-1) ** (k - 1) * num[k] for k in range(1, m + 1)]
        expected = [g_rec(m, k) for k in range(1, m + 1)]
    elif variable == LAMBDA:
        # lambda sum_k <<n,k>> lambda^k / (1-lambda)^(2n+1)
        n = -m
        width = max(n, 1)
        _check_shape(form.power == 2 * n + 1 and num[0] == 0 and num.degree == width, variable, m)
        rule = "eulerian2"
        values = [num[k + 1] for k in range(width)]
        expected = [Fraction(eulerian2(n, k)) for k in range(width)]
    elif m >= 1:
        # sum_k h(m,k) zeta^k / (1+zeta)^m
        _check_shape(form.power == m and num[0] == 0 and num.degree == m, variable, m)
        rule = "h"
        values = [num[k] for k in range(1, m + 1)]
        expected = [h_rec(m, k) for k in range(1, m + 1)]
    elif m == 0:
        _check_shape(form == RationalFunction.from_coeffs(ZETA, (0, 1)), variable, m)
        return CoefficientRow("stirling2assoc", 0, [])
    else:
        # zeta (1+zeta)^(n+1) sum_k {{n+k,k}} zeta^(k-1)
        n = -m
        _check_shape(form.power == 0, variable, m)
        inner = _strip_zeta_factors(num, n)
        _check_shape(inner.degree == n - 1, variable, m)
        rule = "stirling2assoc"
        values = [inner[k] for k in range(n)]
        expected = [Fraction(stirling2_assoc(n + k + 1, k + 1)) for k in range(n)]

    if values != expected:
        raise CanonicalFormError(f"{rule} row extracted from m={m} disagrees with the {rule} triangle")
    return CoefficientRow(rule, m, values)


def _label(prefix: str, m: int) -> str:
    return f"{prefix}_{m}" if 0 <= m <= 9 else f"{prefix}_{{{m}}}"


def render_form(form: RationalFunction) -> str:
    """Factored display: lambda(1+8lambda+6lambda^2)/(1-lambda)^7, zeta(1+zeta)^3(1+3zeta), ..."""
    num = form.numerator
    var = form.variable
    if num.is_zero() or (form.power == 0 and var == LAMBDA):
        return str(num)

    j = num.valuation()
    inner = Polynomial(var, num.coeffs[j:])
    out = "" if j == 0 else (var if j == 1 else f"{var}^{j}")

    if form.power == 0:
        r = 0
        while inner.degree > 0 and inner(-1) == 0:
            inner, _ = inner.divide_linear(-1)
            r += 1
        if r:
            out += f"({form.base_label})" + (f"^{r}" if r > 1 else "")

    if inner != Polynomial.constant(var, 1):
        out += f"({inner})"
    out = out or "1"
    if form.power:
        out += f"/({form.base_label})" + (f"^{form.power}" if form.power > 1 else "")
    return out


def render_entry(entry: SequenceEntry, variable: str = LAMBDA) -> str:
    prefix = "G" if variable == LAMBDA else "H"
    return f"{_label(prefix, entry.m)} = {render_form(entry.form(variable))}"


def entry_to_dict(entry: SequenceEntry, variable: str = LAMBDA) -> dict:
    return dict(m=entry.m, **entry.form(variable).to_dict())
