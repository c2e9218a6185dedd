"""Exact rational scalars.

All exact computation in this package runs over arbitrary-precision
rationals.  We use gmpy2.mpq when available (much faster big-integer
arithmetic) and fall back to fractions.Fraction; both are always reduced
with a positive denominator, which is the invariant the rest of the code
relies on.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rat(num, den=1):
        return _mpq(num, den)

    RATIONAL_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    def rat(num, den=1):
        return Fraction(num, den)

    RATIONAL_BACKEND = "fractions"

ZERO = rat(0)
ONE = rat(1)


def rat_from_str(s: str):
    """Parse the canonical wire format "p/q" (or "p" when q == 1)."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return rat(int(p), int(q))
    return rat(int(s))


def rat_str(x) -> str:
    """Canonical string form: "p/q", or just "p" for integers."""
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def as_float(x) -> float:
    return x.numerator / x.denominator
