# Exact checks of the summation identities tying the triangles together.

from __future__ import annotations

from ..errors import IntegralityError
from ..exact_arith import binomial
from ..poly_algebra import ZETA, Polynomial, base_polynomial
from .eulerian import eulerian2
from .g_numbers import g_difference, g_egyptian, g_genfunc, g_hypercube, g_rec
from .h_numbers import h_from_g, h_rec
from .numerators import numerator_N
from .stirling import stirling2_assoc


def verify_eq5(m: int) -> bool:
    """sum_k <<m,k>> (1+zeta)^(m-k-1) zeta^k == sum_k {{m+k,k}} zeta^(k-1) as polynomials."""
    zeta = Polynomial.monomial(ZETA, 1)
    lhs = Polynomial(ZETA)
    for k in range(m + 1):
        e = eulerian2(m, k)
        if e == 0:
            continue
        if m - k - 1 < 0:
            return False
        lhs = lhs + base_polynomial(ZETA) ** (m - k - 1) * zeta**k * e
    rhs = Polynomial(ZETA, tuple(stirling2_assoc(m + k, k) for k in range(1, m + 1)))
    return lhs == rhs


def verify_eq6(n: int, q: int) -> bool:
    """{{n+q,q}} == sum_{i=0..n} C(n-i-1, q-i-1) <<n,i>>"""
    rhs = sum(binomial(n - i - 1, q - i - 1) * eulerian2(n, i) for i in range(n + 1))
    return stirling2_assoc(n + q, q) == rhs


def verify_eq7(n: int, q: int) -> bool:
    """<<n,q>> == sum_{i=0..n} (-1)^(q-i) C(n-i-1, q-i) {{n+i+1, i+1}}"""
    rhs = 0
    for i in range(n + 1):
        sign = 1 if (q - i) % 2 == 0 else -1
        rhs += sign * binomial(n - i - 1, q - i) * stirling2_assoc(n + i + 1, i + 1)
    return eulerian2(n, q) == rhs


def verify_eq8(m: int) -> bool:
    return all(h_from_g(m, k) == h_rec(m, k) for k in range(1, m + 1))


def verify_a_recurrence(m: int) -> bool:
    """{{m+k,k}} == (m+k-1) {{m+k-2,k-1}} + k {{m+k-1,k}} for 1 <= k <= m"""
    return all(
        stirling2_assoc(m + k, k) == (m + k - 1) * stirling2_assoc(m + k - 2, k - 1) + k * stirling2_assoc(m + k - 1, k)
        for k in range(1, m + 1)
    )


def verify_h_diagonal(m: int) -> bool:
    assert m >= 2
    return h_rec(m, m) == h_rec(m, m - 1) / m


def verify_g_formulas(m: int) -> bool:
    for k in range(1, m + 1):
        value = g_rec(m, k)
        if not all(fn(m, k) == value for fn in (g_egyptian, g_difference, g_genfunc, g_hypercube)):
            return False
    return True


def verify_numerators(m: int) -> bool:
    try:
        for k in range(1, m + 1):
            numerator_N(m, k)
    except IntegralityError:
        return False
    return True
