"""Matrices of polynomials and exact determinants.

Determinants use fraction-free (Bareiss) elimination: every division in
the schedule is exact in the polynomial ring, which avoids the coefficient
blow-up of naive elimination over the fraction field.  Cofactor expansion
is kept only as a test oracle (see tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import Poly


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Poly]]) -> "PolyMatrix":
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return PolyMatrix(len(rows), ncols, tuple(p for r in rows for p in r))

    def at(self, i: int, j: int) -> Poly:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Poly]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def delete(self, drop_rows: Sequence[int], drop_cols: Sequence[int]) -> "PolyMatrix":
        """Submatrix with the given 0-based rows/columns removed."""
        dr, dc = set(drop_rows), set(drop_cols)
        rows = [
            [self.at(i, j) for j in range(self.cols) if j not in dc]
            for i in range(self.rows)
            if i not in dr
        ]
        return PolyMatrix.from_rows(rows)


def polymat_det(m: PolyMatrix) -> Poly:
    """Exact determinant of a square polynomial matrix (Bareiss)."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = Poly.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det
