"""Laurent polynomials N(x) / x^d, for symbolic derivatives of weighted forms.

The logarithmic derivatives w'/w of the supported weights are Laurent
polynomials, so the coefficient functions in d^k/dx^k (A(x) w(x)) =
B_k(x) w(x) stay in this class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly
from .rationals import rat
from .weights import HERMITE, LAGUERRE1, LAGUERRE2, WeightFamily


@dataclass(frozen=True)
class Laurent:
    num: Poly
    shift: int = 0  # value = num(x) / x^shift

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError("shift must be non-negative")

    @staticmethod
    def from_poly(p: Poly) -> "Laurent":
        return Laurent(p, 0)

    def _reduced(self) -> "Laurent":
        num, shift = self.num, self.shift
        while shift > 0 and num.coeffs and num.coeffs[0] == 0:
            num = Poly(num.coeffs[1:])
            shift -= 1
        if num.is_zero:
            shift = 0
        return Laurent(num, shift)

    def __add__(self, other: "Laurent") -> "Laurent":
        d = max(self.shift, other.shift)
        a = self.num * Poly.monomial(d - self.shift)
        b = other.num * Poly.monomial(d - other.shift)
        return Laurent(a + b, d)._reduced()

    def __mul__(self, other: "Laurent") -> "Laurent":
        return Laurent(self.num * other.num, self.shift + other.shift)._reduced()

    def derivative(self) -> "Laurent":
        # (N / x^d)' = (N' x - d N) / x^{d+1}
        n, d = self.num, self.shift
        if d == 0:
            return Laurent(n.derivative(), 0)
        return Laurent(n.derivative() * Poly.x() - n.scale(d), d + 1)._reduced()

    def __call__(self, x):
        x = rat(x)
        if self.shift and x == 0:
            raise ZeroDivisionError("Laurent pole at x = 0")
        v = self.num(x)
        return v / x**self.shift if self.shift else v


def log_derivative(family: WeightFamily, j: int) -> Laurent:
    """w_j'(x) / w_j(x) for the named weight families."""
    if family.kind == HERMITE:
        return Laurent(Poly([family.c[j - 1], -2]), 0)
    if family.kind == LAGUERRE1:
        return Laurent(Poly([family.alpha[j - 1], -1]), 1)
    if family.kind == LAGUERRE2:
        return Laurent(Poly([family.alpha[0], -family.c[j - 1]]), 1)
    raise ValueError("no closed-form logarithmic derivative for this family")
