# Dense univariate polynomials, rational functions with a structured (1-lambda)^p / (1+zeta)^p
# denominator, and truncated power series, all over Fraction.

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, VariableMismatchError
from .exact_arith import binomial


__all__ = [
    "LAMBDA",
    "ZETA",
    "Polynomial",
    "RationalFunction",
    "PowerSeries",
    "base_polynomial",
    "denominator_label",
    "poly_arithmetic",
    "poly_derivative",
    "weighted_integral",
    "mobius_substitute",
    "series_expand",
    "series_compose",
]


LAMBDA = "lambda"
ZETA = "zeta"

# canonical denominator factor is 1 + sign * x
_BASE_SIGN = {LAMBDA: -1, ZETA: 1}


def _format_term(c: Fraction, k: int, variable: str) -> str:
    mag = abs(c)
    if k == 0:
        return str(mag)
    power = variable if k == 1 else f"{variable}^{k}"
    if mag == 1:
        return power
    if mag.denominator == 1:
        return f"{mag}{power}"
    return f"({mag}){power}"


@dataclass(frozen=True)
class Polynomial:
    variable: str
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @staticmethod
    def constant(variable: str, c: int | Fraction) -> Polynomial:
        return Polynomial(variable, (c,))

    @staticmethod
    def monomial(variable: str, k: int, c: int | Fraction = 1) -> Polynomial:
        assert k >= 0
        return Polynomial(variable, (0,) * k + (c,))

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        """Lowest power with a nonzero coefficient."""
        assert not self.is_zero()
        return next(k for k, c in enumerate(self.coeffs) if c)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x: int | Fraction) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def _check(self, other: Polynomial) -> None:
        if self.variable != other.variable:
            raise VariableMismatchError(f"cannot combine {self.variable} and {other.variable} polynomials")

    def __neg__(self) -> Polynomial:
        return Polynomial(self.variable, tuple(-c for c in self.coeffs))

    def __add__(self, other: Polynomial | int | Fraction) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.variable, other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.variable, tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other: Polynomial | int | Fraction) -> Polynomial:
        return self + (-other)

    def __rsub__(self, other: int | Fraction) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | int | Fraction) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(self.variable, tuple(c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.variable)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(self.variable, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        assert n >= 0
        out = Polynomial.constant(self.variable, 1)
        for _ in range(n):
            out = out * self
        return out

    def divide_linear(self, root: int | Fraction) -> tuple[Polynomial, Fraction]:
        """Synthetic division by (x - root). Returns (quotient, remainder)."""
        if self.is_zero():
            return self, Fraction(0)
        acc = Fraction(0)
        quotient = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            quotient.append(acc)
        remainder = quotient.pop()
        return Polynomial(self.variable, tuple(reversed(quotient))), remainder

    def derivative(self) -> Polynomial:
        return Polynomial(self.variable, tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def weighted_integral(self) -> Polynomial:
        """F -> int_0^x F(r) (1 - r) / r dr, termwise x^k -> x^k/k - x^(k+1)/(k+1)."""
        if self[0] != 0:
            raise DomainError(f"weighted integral needs a zero constant term, got {self[0]}")
        out = [Fraction(0)] * (len(self.coeffs) + 1)
        for k, c in enumerate(self.coeffs):
            if k and c:
                out[k] += c / k
                out[k + 1] -= c / (k + 1)
        return Polynomial(self.variable, tuple(out))

    def __str__(self) -> str:
        terms = [(k, c) for k, c in enumerate(self.coeffs) if c]
        if not terms:
            return "0"
        out = []
        for i, (k, c) in enumerate(terms):
            sign = "-" if c < 0 else ("+" if i else "")
            out.append(sign + _format_term(c, k, self.variable))
        return "".join(out)


def base_polynomial(variable: str) -> Polynomial:
    if variable not in _BASE_SIGN:
        raise DomainError(f"no canonical denominator for variable {variable!r}")
    return Polynomial(variable, (1, _BASE_SIGN[variable]))


def denominator_label(variable: str) -> str:
    return f"1{'-' if _BASE_SIGN[variable] < 0 else '+'}{variable}"


@dataclass(frozen=True)
class RationalFunction:
    """numerator / base^power with base = (1 - lambda) or (1 + zeta), kept in lowest terms."""

    numerator: Polynomial
    power: int = 0

    def __post_init__(self) -> None:
        assert self.power >= 0
        sign = _BASE_SIGN.get(self.numerator.variable)
        if sign is None:
            raise DomainError(f"no canonical denominator for variable {self.numerator.variable!r}")

        num, power = self.numerator, self.power
        if num.is_zero():
            power = 0
        # base = sign * (x - root)
        root = Fraction(-1, sign)
        while power > 0 and num(root) == 0:
            num, _ = num.divide_linear(root)
            num = num * Fraction(1, sign)
            power -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "power", power)

    @staticmethod
    def from_coeffs(variable: str, coeffs: Iterable[int | Fraction], power: int = 0) -> RationalFunction:
        return RationalFunction(Polynomial(variable, tuple(coeffs)), power)

    @property
    def variable(self) -> str:
        return self.numerator.variable

    @property
    def base(self) -> Polynomial:
        return base_polynomial(self.variable)

    @property
    def base_label(self) -> str:
        return denominator_label(self.variable)

    def is_polynomial(self) -> bool:
        return self.power == 0

    def is_canonical(self) -> bool:
        return self.power == 0 or self.numerator(Fraction(-1, _BASE_SIGN[self.variable])) != 0

    def __mul__(self, other: Polynomial | int | Fraction) -> RationalFunction:
        return RationalFunction(self.numerator * other, self.power)

    __rmul__ = __mul__

    def mul_base_power(self, j: int) -> RationalFunction:
        """Multiply by base^j, j of either sign."""
        if j < 0:
            return RationalFunction(self.numerator, self.power - j)
        cancel = min(j, self.power)
        return RationalFunction(self.numerator * self.base ** (j - cancel), self.power - cancel)

    def derivative(self) -> RationalFunction:
        # (P / B^p)' = (P' B - p P B') / B^(p+1), B' = sign
        p, num = self.power, self.numerator
        sign = _BASE_SIGN[self.variable]
        return RationalFunction(num.derivative() * self.base - num * (p * sign), p + 1)

    def carlitz_operator(self) -> RationalFunction:
        """z d/dz written in the form's own variable: (lambda/(1-lambda)) d/dlambda or zeta (1+zeta)^2 d/dzeta."""
        x = Polynomial.monomial(self.variable, 1)
        return (self.derivative() * x).mul_base_power(-1 if self.variable == LAMBDA else 2)

    def __str__(self) -> str:
        if self.power == 0:
            return str(self.numerator)
        exponent = f"^{self.power}" if self.power > 1 else ""
        return f"({self.numerator})/({self.base_label}){exponent}"

    def to_dict(self) -> dict:
        return dict(
            variable=self.variable,
            numerator_coeffs=[str(c) for c in self.numerator.coeffs],
            base=self.base_label,
            power=self.power,
        )


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series c_0 + c_1 x + ... + c_N x^N."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        assert len(self.coeffs) > 0
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @staticmethod
    def zeros(order: int) -> PowerSeries:
        return PowerSeries((0,) * (order + 1))

    @staticmethod
    def from_polynomial(p: Polynomial, order: int) -> PowerSeries:
        return PowerSeries(tuple(p[k] for k in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> PowerSeries:
        assert 0 <= order <= self.order
        return PowerSeries(self.coeffs[: order + 1])

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __add__(self, other: PowerSeries | int | Fraction) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return PowerSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        n = min(self.order, other.order) + 1
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    __radd__ = __add__

    def __sub__(self, other: PowerSeries | int | Fraction) -> PowerSeries:
        return self + (-other)

    def __rsub__(self, other: int | Fraction) -> PowerSeries:
        return (-self) + other

    def __mul__(self, other: PowerSeries | int | Fraction) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return PowerSeries(tuple(c * other for c in self.coeffs))
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a:
                for j in range(order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out))

    __rmul__ = __mul__

    def reciprocal(self) -> PowerSeries:
        c0 = self.coeffs[0]
        if c0 == 0:
            raise DomainError("series with zero constant term has no reciprocal")
        out = [1 / c0]
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
            out.append(-acc / c0)
        return PowerSeries(tuple(out))

    def __truediv__(self, other: PowerSeries | int | Fraction) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return PowerSeries(tuple(c / other for c in self.coeffs))
        return self * other.reciprocal()


def poly_arithmetic(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    fn = dict(add=operator.add, subtract=operator.sub, multiply=operator.mul)[op]
    a._check(b)
    return fn(a, b)


def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def weighted_integral(p: Polynomial) -> Polynomial:
    return p.weighted_integral()


_DIRECTIONS = {"lambda->zeta": (LAMBDA, ZETA), "zeta->lambda": (ZETA, LAMBDA)}


def mobius_substitute(f: RationalFunction, direction: str | None = None) -> RationalFunction:
    """Substitute lambda = zeta/(1+zeta) or zeta = lambda/(1-lambda).

    Both maps send the source base to 1/target base, so a degree-d numerator sum c_k x^k homogenises to
    sum c_k y^k B(y)^(d-k) over B(y)^d and the source denominator B_src^p becomes a factor B(y)^p.
    """
    source = f.variable
    if direction is None:
        target = ZETA if source == LAMBDA else LAMBDA
    else:
        expected, target = _DIRECTIONS[direction]
        if source != expected:
            raise VariableMismatchError(f"direction {direction} expects a {expected} function, got {source}")

    d = f.numerator.degree
    if d < 0:
        return RationalFunction(Polynomial(target))

    y = Polynomial.monomial(target, 1)
    base = base_polynomial(target)
    num = Polynomial(target)
    for k, c in enumerate(f.numerator.coeffs):
        if c:
            num = num + y**k * base ** (d - k) * c
    return RationalFunction(num, d).mul_base_power(f.power)


def series_expand(f: RationalFunction, order: int) -> PowerSeries:
    # 1 / (1 + s x)^p = sum_n C(n+p-1, n) (-s)^n x^n
    sign = _BASE_SIGN[f.variable]
    p = f.power
    inverse = PowerSeries(tuple(binomial(n + p - 1, n) * (-sign) ** n for n in range(order + 1)))
    return PowerSeries.from_polynomial(f.numerator, order) * inverse


def series_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(x)) by Horner evaluation, truncated to the common order."""
    if inner[0] != 0:
        raise DomainError(f"inner series must have zero constant term, got {inner[0]}")
    order = min(outer.order, inner.order)
    inner = inner.truncate(order)
    # inner^j starts at x^j, so coefficients of outer above the order never contribute
    out = PowerSeries.zeros(order) + outer[order]
    for c in reversed(outer.coeffs[:order]):
        out = out * inner + c
    return out
