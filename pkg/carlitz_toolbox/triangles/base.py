from __future__ import annotations

import json
import logging
import threading
from abc import ABCMeta, abstractmethod
from fractions import Fraction


logger = logging.getLogger(__name__)


class BaseTriangle(metaclass=ABCMeta):
    """Memoised map (m, k) -> Fraction, filled one row at a time.

    Row m is stored for k in k_range(m); anything outside reads as 0.
    """

    rule: str = ""
    integral: bool = False
    first_row: int = 1

    def __init__(self) -> None:
        self._rows: dict[int, list[Fraction]] = {}
        self._lock = threading.RLock()

    # subclass only needs to implement these two
    @abstractmethod
    def k_range(self, m: int) -> range:
        pass

    @abstractmethod
    def _compute_row(self, m: int) -> list[Fraction]:
        pass

    def __call__(self, m: int, k: int) -> Fraction:
        if m < self.first_row:
            return self._boundary(m, k)
        row = self.row(m)
        ks = self.k_range(m)
        return row[k - ks.start] if k in ks else Fraction(0)

    def _boundary(self, m: int, k: int) -> Fraction:
        return Fraction(0)

    def row(self, m: int) -> list[Fraction]:
        assert m >= self.first_row, f"{self.rule} rows start at m={self.first_row}"
        if m not in self._rows:
            with self._lock:
                for i in range(self.first_row, m + 1):
                    if i not in self._rows:
                        self._rows[i] = self._compute_row(i)
                        logger.debug("%s: filled row %d", self.rule, i)
        return list(self._rows[m])

    def rows(self, max_m: int, min_m: int = 1) -> list[tuple[int, list[Fraction]]]:
        return [(m, self.row(m)) for m in range(max(min_m, self.first_row), max_m + 1)]

    def snapshot(self) -> dict[tuple[int, int], Fraction]:
        with self._lock:
            return {(m, k): v for m, row in self._rows.items() for k, v in zip(self.k_range(m), row)}

    def to_csv(self, max_m: int) -> str:
        lines = ["m,k,value"]
        for m, row in self.rows(max_m):
            lines.extend(f"{m},{k},{v}" for k, v in zip(self.k_range(m), row))
        return "\n".join(lines) + "\n"

    def to_json(self, max_m: int) -> str:
        rows = [
            dict(m=m, k_min=self.k_range(m).start, values=[str(v) for v in row]) for m, row in self.rows(max_m)
        ]
        return json.dumps(dict(triangle=self.rule, rows=rows))

    def to_text(self, max_m: int) -> str:
        # rows with no admissible k (m = 1 of the associated Stirling triangle) are skipped
        return "".join(" ".join(str(v) for v in row) + "\n" for _, row in self.rows(max_m) if row)
