"""Dense univariate polynomials over exact rationals.

Coefficients are stored lowest power first with no trailing zeros; the
zero polynomial is the empty coefficient tuple.  Values are immutable and
all operations return new polynomials, so everything here is safe to use
concurrently.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .rationals import ONE, ZERO, as_float, rat, rat_from_str, rat_str, sign


class ExactDivisionError(ArithmeticError):
    """Raised when a division expected to be exact leaves a remainder."""


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO_POLY

    @staticmethod
    def one() -> "Poly":
        return _ONE_POLY

    @staticmethod
    def x() -> "Poly":
        return _X_POLY

    @staticmethod
    def constant(c) -> "Poly":
        return Poly([c])

    @staticmethod
    def monomial(power: int, coeff=1) -> "Poly":
        return Poly([ZERO] * power + [rat(coeff)])

    # -- basic queries -----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            return ZERO
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = [f"{rat_str(c)}*x^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return "Poly(" + " + ".join(terms) + ")"

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO_POLY
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = rat(c)
        return Poly([a * c for a in self.coeffs])

    def __divmod__(self, other: "Poly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        if len(rem) <= d:
            return _ZERO_POLY, self
        quot = [ZERO] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - d] = q
            for j in range(d + 1):
                rem[k - d + j] = rem[k - d + j] - q * other.coeffs[j]
        return Poly(quot), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ExactDivisionError("division left a nonzero remainder")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(ONE / self.leading)

    # -- calculus and evaluation --------------------------------------

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs) if k > 0])

    def antiderivative(self) -> "Poly":
        """Formal antiderivative with zero constant term."""
        return Poly([ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def __call__(self, x):
        x = rat(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, z: complex) -> tuple[complex, float]:
        """Evaluate at a complex double after scaling coefficients.

        Coefficients are divided by the max-magnitude coefficient so huge
        exact values fit in doubles.  Returns (value of scaled polynomial,
        scale factor as float).  Raises OverflowError if the scale itself
        cannot be represented.
        """
        if self.is_zero:
            return 0j, 1.0
        scale = max(abs(c) for c in self.coeffs)
        inv = ONE / scale
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + as_float(c * inv)
        return acc, as_float(scale)

    # -- gcd / squarefree ---------------------------------------------

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd via the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, divmod(a, b)[1]
            # keep coefficients small; a positive rescale never changes the gcd
            if not b.is_zero:
                b = b.monic()
        if a.is_zero:
            return a
        return a.monic()

    def squarefree_part(self) -> "Poly":
        """p / gcd(p, p'), made monic; shares p's distinct roots, all simple."""
        if self.is_zero:
            raise ValueError("zero polynomial has no squarefree part")
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return self.exact_div(g).monic()

    # -- serialization -------------------------------------------------

    def to_strings(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    @staticmethod
    def from_strings(items: Sequence[str]) -> "Poly":
        return Poly([rat_from_str(s) for s in items])

    def sign_at_pos_infinity(self) -> int:
        return sign(self.leading)

    def sign_at_neg_infinity(self) -> int:
        s = sign(self.leading)
        return -s if self.degree % 2 else s


_ZERO_POLY = Poly.__new__(Poly)
object.__setattr__(_ZERO_POLY, "coeffs", ())
_ONE_POLY = Poly([1])
_X_POLY = Poly([0, 1])


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_eval(p: Poly, x):
    return p(x)


def poly_eval_complex(p: Poly, z: complex) -> tuple[complex, float]:
    return p.eval_complex(z)
