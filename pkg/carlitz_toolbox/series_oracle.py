# Ground truth straight from the defining sums: T(z) = sum n^(n-1) z^n/n!, Z(z) = sum n^n z^n/n!,
# R_m(z) = sum n^(n-m) z^n/n!. Closed forms are checked by composing them with these prefixes.

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import torch

from .carlitz_seq import CarlitzSequence, build
from .errors import BudgetExceededError, DomainError
from .exact_arith import factorial
from .poly_algebra import PowerSeries, series_compose, series_expand
from .triangles import g_rec


__all__ = [
    "EgfPrefix",
    "egf_prefix",
    "verify_lambda_zeta_relation",
    "verify_closed_form",
    "interpretation_probability",
    "g_probability_bruteforce",
    "enumeration_budget",
    "in_budget_cells",
    "verify_probability_oracle",
]


logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000
BUDGET_ENV = "CARLITZ_ENUM_BUDGET"

# kind -> the m of r_of_m it aliases
_KINDS = dict(tree=1, endo=0, r_of_m=None)


@dataclass(frozen=True)
class EgfPrefix:
    kind: str
    m: int
    order: int
    series: PowerSeries


def egf_prefix(kind: str, order: int, m: int | None = None) -> EgfPrefix:
    if kind not in _KINDS:
        raise DomainError(f"unknown prefix kind {kind!r}, expected one of {', '.join(_KINDS)}")
    if order < 1:
        raise DomainError(f"prefix order must be >= 1, got {order}")
    if kind == "r_of_m":
        if m is None:
            raise DomainError("r_of_m prefix needs m")
    else:
        m = _KINDS[kind]

    # Fraction(n) ** negative exponent stays exact
    coeffs = [Fraction(0)] + [Fraction(n) ** (n - m) / factorial(n) for n in range(1, order + 1)]
    return EgfPrefix(kind, m, order, PowerSeries(tuple(coeffs)))


def verify_lambda_zeta_relation(order: int) -> bool:
    """zeta = lambda / (1 - lambda) as series in z."""
    tree = egf_prefix("tree", order).series
    endo = egf_prefix("endo", order).series
    return tree / (1 - tree) == endo


def verify_closed_form(m: int, order: int, sequence: CarlitzSequence | None = None) -> bool:
    entry = build(m, sequence)
    target = egf_prefix("r_of_m", order, m).series
    tree = egf_prefix("tree", order).series
    endo = egf_prefix("endo", order).series

    via_lambda = series_compose(series_expand(entry.lambda_form, order), tree)
    via_zeta = series_compose(series_expand(entry.zeta_form, order), endo)
    ok = via_lambda == target and via_zeta == target
    logger.debug("closed form m=%d order=%d: %s", m, order, "ok" if ok else "MISMATCH")
    return ok


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def _check_budget(m: int, k: int, budget: int) -> int:
    if not 1 <= k <= m:
        raise DomainError(f"probability view needs 1 <= k <= m, got ({m}, {k})")
    total = factorial(k) ** (m - k + 1)
    if total > budget:
        raise BudgetExceededError(f"({k}!)^{m - k + 1} = {total} matrices exceeds the enumeration budget {budget}")
    return total


def _enumerate(m: int, k: int, budget: int | None) -> tuple[torch.Tensor, torch.Tensor]:
    """Enumerate all (k!)^N matrices (N = m-k+1, every column a permutation of 1..k).

    Each column is reduced to the bitmask of values sitting above 1 in it; a matrix has no value strictly below 1
    in every column iff the OR of its column masks covers {2..k}. Returns that success flag shaped
    (first column, remaining columns) and, per first column, whether 2..k appear in it in increasing order.
    """
    budget = enumeration_budget(budget)
    total = _check_budget(m, k, budget)

    perms = list(permutations(range(1, k + 1)))
    masks = torch.tensor([sum(1 << (j - 2) for j in perm[: perm.index(1)]) for perm in perms], dtype=torch.int64)
    ordered = torch.tensor([[j for j in perm if j != 1] == list(range(2, k + 1)) for perm in perms])

    # the first column stays the leading index of the flattened product
    acc = masks
    for _ in range(m - k):
        acc = (acc[:, None] | masks[None, :]).reshape(-1)
    assert acc.numel() == total

    success = (acc == (1 << (k - 1)) - 1).reshape(len(perms), -1)
    logger.debug("enumerated %d matrices for (m, k) = (%d, %d): %d succeed", total, m, k, int(success.sum()))
    return success, ordered


def interpretation_probability(m: int, k: int, budget: int | None = None) -> Fraction:
    """Probability that a random k x N matrix (N = m-k+1, every column a permutation of 1..k) has no value
    lying strictly below 1 in every column."""
    success, _ = _enumerate(m, k, budget)
    return Fraction(int(success.sum().item()), success.numel())


def g_probability_bruteforce(m: int, k: int, budget: int | None = None) -> Fraction:
    """g(m,k) counted from the matrix enumeration: the event above together with 2..k appearing in increasing
    order in the first column."""
    success, ordered = _enumerate(m, k, budget)
    return Fraction(int((success & ordered[:, None]).sum().item()), success.numel())


def in_budget_cells(max_m: int, budget: int | None = None) -> list[tuple[int, int]]:
    budget = enumeration_budget(budget)
    return [(m, k) for m in range(1, max_m + 1) for k in range(1, m + 1) if factorial(k) ** (m - k + 1) <= budget]


def verify_probability_oracle(max_m: int, budget: int | None = None) -> tuple[bool, tuple[int, int] | None]:
    """Check the enumeration against g_rec on every in-budget cell up to max_m. Returns the first failing cell."""
    for m, k in in_budget_cells(max_m, budget):
        if g_probability_bruteforce(m, k, budget) != g_rec(m, k):
            return False, (m, k)
    return True, None
