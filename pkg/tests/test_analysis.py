import json
import math
from fractions import Fraction

import pytest

from carlitz_toolbox.analysis import (
    alternating_sum_h,
    asym_fit,
    diag_limit_trend,
    eulerian2_rowsum_check,
    forward_differences,
    integrality_check,
    kth_differences,
)
from carlitz_toolbox.errors import DomainError
from carlitz_toolbox.poly_algebra import Polynomial


def test_alternating_sum():
    assert alternating_sum_h(1) == (1, True)
    assert alternating_sum_h(4) == (Fraction(1, 24), True)
    for m in range(1, 21):
        value, ok = alternating_sum_h(m)
        assert ok and value == Fraction(1, math.factorial(m))
    with pytest.raises(DomainError):
        alternating_sum_h(0)


class TestDiagonal:
    def test_trend(self):
        trend = diag_limit_trend(20)
        assert trend.decreasing
        assert [m for m, _, _ in trend.rows] == list(range(2, 21))
        assert trend.rows[-1][2] < 1e-4

    def test_values(self):
        trend = diag_limit_trend(6)
        gaps = {m: float(gap) for m, _, gap in trend.rows}
        assert gaps[2] == pytest.approx(0.132121, abs=1e-6)
        assert gaps[6] == pytest.approx(4.6013e-3, abs=1e-6)

    def test_text(self):
        text = diag_limit_trend(4).to_text()
        assert text.startswith("# |h(m,m) - 1/e| at 40 significant digits")
        assert text.endswith("strictly decreasing: yes\n")

    def test_domain(self):
        with pytest.raises(DomainError):
            diag_limit_trend(1)


def test_integrality():
    for m in range(1, 13):
        assert integrality_check(m)


@pytest.mark.parametrize("n", range(1, 11))
def test_eulerian2_rowsum(n):
    assert eulerian2_rowsum_check(n)


def test_forward_differences():
    table = forward_differences([Fraction(m * m) for m in range(5)])
    assert table[1] == [1, 3, 5, 7]
    assert table[2] == [2, 2, 2]
    assert table[3] == [0, 0]
    assert [len(row) for row in table] == [5, 4, 3, 2, 1]


def test_fourth_differences_decay():
    diffs = kth_differences(4, 21, 40)
    assert len(diffs) == 16
    mags = [abs(d) for d in diffs]
    assert all(b < a for a, b in zip(mags, mags[1:]))


class TestAsymFit:
    def test_linear(self):
        report = asym_fit(2, 40)
        assert report.stabilized
        assert report.m_range == (32, 40)
        assert report.fitted_polynomial == Polynomial("m", (-2, 1))
        assert str(report.fitted_polynomial) == "-2+m"
        assert str(report.shifted_polynomial) == "1+(m-3)"

    def test_quadratic(self):
        report = asym_fit(3, 60)
        assert report.stabilized
        assert report.fitted_polynomial == Polynomial("m", (7, -5, 1))
        assert str(report.shifted_polynomial) == "1+(m-3)+(m-3)^2"
        assert [len(row) for row in report.difference_table] == [9 - j for j in range(9)]

    def test_report_formats(self):
        report = asym_fit(2, 40)
        data = json.loads(report.to_json())
        assert data["fitted_polynomial"]["coeffs"] == ["-2", "1"]
        assert data["shifted_polynomial"]["variable"] == "(m-3)"
        assert "p_2(m) = -2+m" in report.to_text()

    def test_not_stabilized(self):
        # the tail of (k-1)! h(m,k) is still far from polynomial this early
        report = asym_fit(4, 12, tolerance=Fraction(1, 10**12))
        assert not report.stabilized
        assert report.fitted_polynomial is None
        assert report.to_dict()["fitted_polynomial"] is None

    @pytest.mark.parametrize("k,M", [(1, 40), (0, 40), (3, 10)])
    def test_rejects(self, k, M):
        with pytest.raises(DomainError):
            asym_fit(k, M)
