from fractions import Fraction

import pytest

from carlitz_toolbox.errors import BudgetExceededError, DomainError
from carlitz_toolbox.exact_arith import factorial
from carlitz_toolbox.series_oracle import (
    BUDGET_ENV,
    egf_prefix,
    g_probability_bruteforce,
    in_budget_cells,
    interpretation_probability,
    verify_closed_form,
    verify_lambda_zeta_relation,
    verify_probability_oracle,
)
from carlitz_toolbox.triangles import g_rec


class TestPrefix:
    def test_tree(self):
        assert egf_prefix("tree", 4).series.coeffs == (0, 1, 1, Fraction(3, 2), Fraction(8, 3))

    def test_endo(self):
        assert egf_prefix("endo", 3).series.coeffs == (0, 1, 2, Fraction(9, 2))

    def test_r_of_m(self):
        assert egf_prefix("r_of_m", 3, m=2).series.coeffs == (0, 1, Fraction(1, 2), Fraction(1, 2))
        # n^(n-m) with m > n stays exact
        assert egf_prefix("r_of_m", 3, m=5).series.coeffs == (0, 1, Fraction(1, 16), Fraction(1, 54))

    def test_aliases(self):
        assert egf_prefix("r_of_m", 10, m=1).series == egf_prefix("tree", 10).series
        assert egf_prefix("r_of_m", 10, m=0).series == egf_prefix("endo", 10).series

    def test_errors(self):
        with pytest.raises(DomainError):
            egf_prefix("tree", 0)
        with pytest.raises(DomainError):
            egf_prefix("r_of_m", 4)
        with pytest.raises(DomainError):
            egf_prefix("forest", 4)


@pytest.mark.parametrize("order", [1, 8, 12])
def test_lambda_zeta_relation(order):
    assert verify_lambda_zeta_relation(order)


@pytest.mark.parametrize("m", range(-8, 13))
def test_closed_form(m):
    assert verify_closed_form(m, 12)


class TestProbability:
    @pytest.mark.parametrize(
        "m,k,expected", [(2, 2, Fraction(1, 2)), (4, 2, Fraction(7, 8)), (3, 3, Fraction(1, 6)), (5, 1, 1)]
    )
    def test_examples(self, m, k, expected):
        assert g_probability_bruteforce(m, k) == expected

    def test_raw_probability(self):
        # two of the six orderings of {1,2,3} put 1 at the bottom
        assert interpretation_probability(3, 3) == Fraction(1, 3)
        assert interpretation_probability(4, 2) == Fraction(7, 8)

    def test_ordered_first_column_share(self):
        # relabelling 2..k maps the increasing first column onto each of the (k-1)! orders
        for m, k in in_budget_cells(7, 200_000):
            ordered = g_probability_bruteforce(m, k, 200_000)
            assert interpretation_probability(m, k, 200_000) == factorial(k - 1) * ordered, (m, k)

    def test_in_budget_cells(self):
        cells = in_budget_cells(8, 200_000)
        assert (8, 8) in cells
        assert (6, 5) in cells
        assert (8, 3) in cells
        assert (7, 5) not in cells
        assert (7, 4) not in cells
        assert (9, 3) not in in_budget_cells(9, 200_000)

    def test_all_cells(self):
        for m, k in in_budget_cells(10, 200_000):
            assert g_probability_bruteforce(m, k, 200_000) == g_rec(m, k), (m, k)
        assert verify_probability_oracle(6) == (True, None)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            g_probability_bruteforce(7, 5)
        with pytest.raises(BudgetExceededError):
            g_probability_bruteforce(4, 2, budget=7)

    def test_budget_env(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV, "5")
        with pytest.raises(BudgetExceededError):
            g_probability_bruteforce(4, 2)
        assert in_budget_cells(3) == [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)]

    def test_domain(self):
        with pytest.raises(DomainError):
            g_probability_bruteforce(2, 3)
